"""Time the hot kernels on every importable backend.

Usage: python benchmarks/bench_kernels.py [--length 4096] [--hankel-order 96]

The pure-python Hankel scan costs O(m^2) word operations per order
(O(m^3) total), so keep --hankel-order modest when the compiled backend
is missing.
"""

import argparse
import random
import time

from plcpkit._kernels import available_backends


def norm(x):
    if isinstance(x, (list, tuple)):
        return tuple(norm(i) for i in x)
    return x


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--length", type=int, default=4096)
    ap.add_argument("--hankel-order", type=int, default=96)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bits = [rng.randrange(2) for _ in range(args.length)]
    unit = [1] + [rng.randrange(2) for _ in range(args.length - 1)]
    hbits = [rng.randrange(2) for _ in range(2 * args.hankel_order - 1)]

    jobs = [
        (f"lcp_profile n={args.length}", lambda mod: mod.lcp_profile(bits)),
        (f"laurent_cf n={args.length}", lambda mod: mod.laurent_cf(bits)),
        (f"series_inverse n={args.length}", lambda mod: mod.series_inverse(unit)),
        (
            f"hankel_parities m={args.hankel_order}",
            lambda mod: mod.hankel_parities(hbits, args.hankel_order),
        ),
    ]

    backends = available_backends()
    names = sorted(backends)
    print("backends:", ", ".join(names))
    print(f"{'kernel':<26}" + "".join(f"{n + ' (ms)':>20}" for n in names) + f"{'speedup':>10}")
    for label, job in jobs:
        outputs = {n: norm(job(backends[n])) for n in names}
        if len(set(outputs.values())) != 1:
            raise SystemExit(f"backends disagree on {label}; run the test suite")
        times = {n: best_of(lambda n=n: job(backends[n]), args.repeats) for n in names}
        row = f"{label:<26}" + "".join(f"{times[n] * 1e3:>20.3f}" for n in names)
        if "compiled" in times and "pure-python" in times:
            row += f"{times['pure-python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
