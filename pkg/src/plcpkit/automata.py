"""Decimation kernels, the u/v square decomposition, and morphism scans.

The 2-kernel of an origin-0 sequence is the closure of the sequence
under the two decimations T0: n -> 2n and T1: n -> 2n + 1.  On a finite
prefix the scan is heuristic: subsequences are compared on their common
known range (at least `tau` terms) and exploration stops honestly when
either the class budget or the usable precision runs out, which the
report distinguishes from genuine closure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from plcpkit.field import GF2, CoeffSeq, TruncSeries
from plcpkit.hankel import is_apwenian_recurrence
from plcpkit.seqgen import UniformMorphism, morphism_fixed_point

__all__ = [
    "decimate",
    "as_kernel_input",
    "KernelClass",
    "KernelReport",
    "kernel_explore",
    "UVPair",
    "uv_decompose",
    "klx_check",
    "build_from_u",
    "eventually_periodic",
    "uniform_morphism_scan",
]


def decimate(s: CoeffSeq, which: str) -> CoeffSeq:
    """T0 keeps the even-index terms, T1 the odd-index ones; origin 0."""
    if s.origin != 0:
        raise ValueError("decimation expects an origin-0 sequence")
    if which == "T0":
        terms = s.terms[0::2]
    elif which == "T1":
        terms = s.terms[1::2]
    else:
        raise ValueError(f"which must be 'T0' or 'T1': {which!r}")
    if not terms:
        raise ValueError("sequence too short to decimate")
    return CoeffSeq(s.field, terms, origin=0)


def as_kernel_input(s: CoeffSeq) -> CoeffSeq:
    """Zero-extend an origin-1 sequence to origin 0 (term n stays at index n)."""
    if s.origin == 0:
        return s
    return CoeffSeq(s.field, (0,) + s.terms, origin=0)


@dataclass(frozen=True)
class KernelClass:
    index: int
    k: int  # witness depth: this class is s[2^k n + j]
    j: int
    depth: int
    terms: tuple  # all known terms of the representative

    def prefix(self, tau: int) -> tuple:
        return self.terms[: min(tau, len(self.terms))]


@dataclass
class KernelReport:
    tau: int
    max_classes: int
    source_length: int
    classes: list
    edges: dict  # (class index, "T0"|"T1") -> class index
    unresolved: list  # (parent index, op, k, j) children too short to compare
    closed: bool
    bound_hit: bool
    bound_reason: str | None  # "max-classes" | "precision" | None

    def class_count(self) -> int:
        return len(self.classes)

    def summary(self) -> str:
        lines = [
            f"classes: {len(self.classes)}"
            f" (tau={self.tau}, max-classes={self.max_classes}, N={self.source_length})",
            f"closed: {str(self.closed).lower()}",
            f"bound-hit: {str(self.bound_hit).lower()}"
            + (f" ({self.bound_reason})" if self.bound_reason else ""),
        ]
        for c in self.classes:
            bits = "".join(map(str, c.prefix(self.tau)))
            lines.append(f"  class {c.index}: k={c.k} j={c.j} len={len(c.terms)} prefix={bits}")
        for (i, op), j in sorted(self.edges.items()):
            lines.append(f"  edge {i} --{op}--> {j}")
        if self.unresolved:
            lines.append(f"  unresolved children: {len(self.unresolved)}")
        return "\n".join(lines)


def kernel_explore(s: CoeffSeq, tau: int = 64, max_classes: int = 256) -> KernelReport:
    """Breadth-first scan of the 2-kernel on a finite prefix.

    Two nodes are identified when they agree on every commonly known
    term, with at least tau known on both sides.  `closed` means every
    decimation of every class landed on a known class; `bound_hit` means
    the scan stopped early (class budget) or some child was too short to
    compare (precision), so closure could not be decided.  Exactly one
    of the two is set.
    """
    if s.origin != 0:
        raise ValueError("kernel scan expects an origin-0 sequence; see as_kernel_input")
    if tau < 1 or max_classes < 1:
        raise ValueError("tau and max_classes must be >= 1")
    if len(s) < 2 * tau:
        raise ValueError(
            f"precision too small: depth-1 subsequences have {len(s) // 2} < tau={tau} terms"
        )

    classes: list[KernelClass] = []
    by_prefix: dict = {}
    edges: dict = {}
    unresolved: list = []
    queue: deque = deque()
    out_of_budget = False

    def identify(terms):
        key = terms[:tau]
        for idx in by_prefix.get(key, ()):
            other = classes[idx].terms
            m = min(len(other), len(terms))
            if other[:m] == terms[:m]:
                return idx
        return None

    def add_class(k, j, depth, terms):
        cls = KernelClass(len(classes), k, j, depth, terms)
        classes.append(cls)
        by_prefix.setdefault(terms[:tau], []).append(cls.index)
        queue.append(cls.index)
        return cls.index

    add_class(0, 0, 0, tuple(s.terms))
    while queue:
        if out_of_budget:
            break
        cur = classes[queue.popleft()]
        for bit, op in ((0, "T0"), (1, "T1")):
            child_terms = cur.terms[bit::2]
            child_k = cur.k + 1
            child_j = cur.j + (bit << cur.k)
            if len(child_terms) < tau:
                unresolved.append((cur.index, op, child_k, child_j))
                continue
            idx = identify(child_terms)
            if idx is None:
                if len(classes) >= max_classes:
                    out_of_budget = True
                    break
                idx = add_class(child_k, child_j, cur.depth + 1, child_terms)
            edges[(cur.index, op)] = idx

    if out_of_budget:
        closed, bound_hit, reason = False, True, "max-classes"
    elif unresolved:
        closed, bound_hit, reason = False, True, "precision"
    else:
        closed, bound_hit, reason = True, False, None
    return KernelReport(
        tau=tau,
        max_classes=max_classes,
        source_length=len(s),
        classes=classes,
        edges=edges,
        unresolved=unresolved,
        closed=closed,
        bound_hit=bound_hit,
        bound_reason=reason,
    )


@dataclass(frozen=True)
class UVPair:
    """Odd/even split of a Laurent tail f = v^2 + x u^2 (in x = 1/t).

    u collects the odd-index terms (u_n = s_{2n+1}), v the even-index
    ones with v_0 = 0; precisions record exactly what the input pins.
    """

    u: TruncSeries
    v: TruncSeries

    def __post_init__(self):
        if self.u.precision < 1 or self.u.coeffs[0] != 1:
            raise ValueError("u must start with 1")
        if self.v.precision < 1 or self.v.coeffs[0] != 0:
            raise ValueError("v must start with 0")


def uv_decompose(f: CoeffSeq) -> UVPair:
    """Split an origin-1 binary prefix with s_1 = 1 into the u/v pair."""
    if f.field.p != 2:
        raise ValueError("decomposition is defined over F2")
    if f.origin != 1:
        raise ValueError("expects an origin-1 sequence; use shift_index(1)")
    if f.terms[0] != 1:
        raise ValueError("requires leading coefficient 1")
    n = len(f)
    u = [f[2 * m + 1] for m in range(0, (n - 1) // 2 + 1)]
    v = [0] + [f[2 * m] for m in range(1, n // 2 + 1)]
    return UVPair(
        u=TruncSeries(GF2, u, len(u), "laurent-tail"),
        v=TruncSeries(GF2, v, len(v), "laurent-tail"),
    )


def klx_check(pair: UVPair) -> bool:
    """Does v^2 + v = 1 + u + x u^2 hold on the known range?

    Squaring doubles precision in characteristic 2, so both sides are
    known exactly as far as u and v are; the comparison uses the common
    range and fabricates nothing.
    """
    u, v = pair.u, pair.v
    lhs = v.square() + v
    one = TruncSeries.constant(GF2, 1, u.precision, u.direction)
    rhs = one + u + u.square().shift(1)
    return lhs.agrees_with(rhs)


def build_from_u(u: CoeffSeq, n: int) -> CoeffSeq:
    """Rebuild the origin-1 sequence with odd part u: a_{2m+1} = u_m,
    a_{2m} = a_m + u_m.  Requires u_0 = 1."""
    if u.field.p != 2:
        raise ValueError("defined over F2")
    if u.origin != 0:
        raise ValueError("u is indexed from 0; use shift_index(0)")
    if u.terms[0] != 1:
        raise ValueError("requires u_0 = 1")
    if n < 1:
        raise ValueError("length must be >= 1")
    need = n // 2 + 1
    if len(u) < need:
        raise ValueError(f"u too short: need {need} terms for length {n}")
    a = [0] * (n + 1)  # a[i] = term at index i, 1-based
    a[1] = u.terms[0]
    for i in range(2, n + 1):
        m = i // 2
        if i % 2 == 1:
            a[i] = u.terms[m]
        else:
            a[i] = (a[m] + u.terms[m]) % 2
    return CoeffSeq(GF2, a[1:], origin=1)


def eventually_periodic(b: CoeffSeq, max_preperiod: int, max_period: int):
    """Smallest (preperiod, period) lexicographically, or None.

    The candidate must be consistent with the entire stored prefix, and
    the prefix must be long enough to see any candidate twice.
    """
    if max_preperiod < 0 or max_period < 1:
        raise ValueError("need max_preperiod >= 0 and max_period >= 1")
    t = b.terms
    if len(t) < max_preperiod + 2 * max_period:
        raise ValueError(
            f"insufficient length: need {max_preperiod + 2 * max_period}, have {len(t)}"
        )
    for rho in range(max_preperiod + 1):
        for pi in range(1, max_period + 1):
            if all(t[i] == t[i + pi] for i in range(rho, len(t) - pi)):
                return (rho, pi)
    return None


def uniform_morphism_scan(k: int, n: int) -> list:
    """All length-k binary morphisms prolongable at 1 whose fixed point
    satisfies the apwenian feedback relation on n terms."""
    if not 2 <= k <= 4:
        raise ValueError("k must be in [2, 4]")
    if n < 256:
        raise ValueError("n must be >= 256 for a meaningful scan")
    found = []
    for image1 in product((0, 1), repeat=k):
        if image1[0] != 1:
            continue
        for image0 in product((0, 1), repeat=k):
            m = UniformMorphism(image0, image1)
            fp = morphism_fixed_point(m, n)
            if is_apwenian_recurrence(fp):
                found.append(m)
    return found
