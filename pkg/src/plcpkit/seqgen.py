"""Generators for the studied binary sequence families.

All of them are driven by a `BitSource`, a deterministic stream of
bits b_0, b_1, ...  Seeded sources use SplitMix64: the state advances
by the 64-bit golden ratio and each output word is finalized with two
xor-shift-multiply rounds; words are consumed least significant bit
first, so bit index i of the stream is bit (i mod 64) of word i // 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from plcpkit.field import GF2, CoeffSeq, DensePoly, TruncSeries, series_inverse

__all__ = [
    "BitSource",
    "derive_seed",
    "rueppel",
    "phi1_jacobi",
    "phi2_selector",
    "phi3_generalized_rueppel",
    "named_sequence",
    "UniformMorphism",
    "morphism_fixed_point",
    "NAMED_SEQUENCES",
]

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64_next(state):
    state = (state + _GOLDEN) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31), state


def _splitmix64_words(seed, count):
    out = []
    state = seed & _M64
    for _ in range(count):
        w, state = _splitmix64_next(state)
        out.append(w)
    return out


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed: one SplitMix64 output of seed XOR (index+1)*golden."""
    w, _ = _splitmix64_next((seed ^ ((index + 1) * _GOLDEN)) & _M64)
    return w


class BitSource:
    """Deterministic bit stream: literal, eventually periodic, or seeded.

    Spec strings: ``literal:1011``, ``periodic:<pre>:<per>`` (either part
    may be empty, the period may not), ``random:<seed>``.
    """

    __slots__ = ("kind", "bits", "preperiod", "period", "seed")

    def __init__(self, kind, bits=(), preperiod=(), period=(), seed=0):
        self.kind = kind
        self.bits = tuple(bits)
        self.preperiod = tuple(preperiod)
        self.period = tuple(period)
        self.seed = seed & _M64
        if kind not in ("literal", "periodic", "random"):
            raise ValueError(f"unknown bit source kind: {kind!r}")
        if kind == "periodic" and not self.period:
            raise ValueError("periodic bit source needs a nonempty period")
        for b in self.bits + self.preperiod + self.period:
            if b not in (0, 1):
                raise ValueError(f"bit source values must be bits: {b!r}")

    @staticmethod
    def _as_bits(value):
        # accept "1011" as well as any iterable of 0/1 ints
        if isinstance(value, str):
            return tuple(int(c) for c in value)
        return tuple(value)

    @classmethod
    def literal(cls, bits):
        return cls("literal", bits=cls._as_bits(bits))

    @classmethod
    def periodic(cls, preperiod, period):
        return cls(
            "periodic",
            preperiod=cls._as_bits(preperiod),
            period=cls._as_bits(period),
        )

    @classmethod
    def seeded(cls, seed):
        return cls("random", seed=seed)

    @classmethod
    def parse(cls, spec: str) -> "BitSource":
        kind, _, rest = spec.partition(":")
        if kind == "literal":
            if not rest or set(rest) - set("01"):
                raise ValueError(f"bad literal bit string: {rest!r}")
            return cls.literal(int(c) for c in rest)
        if kind == "periodic":
            pre, sep, per = rest.partition(":")
            if not sep:
                raise ValueError("periodic spec is periodic:<pre>:<per>")
            if set(pre) - set("01") or set(per) - set("01") or not per:
                raise ValueError(f"bad periodic bit strings: {rest!r}")
            return cls.periodic((int(c) for c in pre), (int(c) for c in per))
        if kind == "random":
            try:
                return cls.seeded(int(rest, 10))
            except ValueError:
                raise ValueError(f"bad seed: {rest!r}") from None
        raise ValueError(f"unknown bit source kind: {kind!r}")

    def spec(self) -> str:
        """Canonical round-trippable spec string."""
        if self.kind == "literal":
            return "literal:" + "".join(map(str, self.bits))
        if self.kind == "periodic":
            return (
                "periodic:"
                + "".join(map(str, self.preperiod))
                + ":"
                + "".join(map(str, self.period))
            )
        return f"random:{self.seed}"

    def bit(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative bit index")
        if self.kind == "literal":
            if i >= len(self.bits):
                raise ValueError(
                    f"literal bit source exhausted at index {i} (have {len(self.bits)})"
                )
            return self.bits[i]
        if self.kind == "periodic":
            if i < len(self.preperiod):
                return self.preperiod[i]
            return self.period[(i - len(self.preperiod)) % len(self.period)]
        word = _splitmix64_words(self.seed, i // 64 + 1)[-1]
        return (word >> (i % 64)) & 1

    def take(self, count: int) -> list:
        if self.kind == "random":
            words = _splitmix64_words(self.seed, (count + 63) // 64)
            return [(words[i // 64] >> (i % 64)) & 1 for i in range(count)]
        return [self.bit(i) for i in range(count)]

    def __repr__(self):
        return f"BitSource({self.spec()!r})"


def rueppel(which: str, n: int) -> CoeffSeq:
    """The two canonical perfect-profile sequences, origin 1.

    "first" has ones exactly at the powers of two, "second" exactly at
    the indices 2^k - 1.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    terms = [0] * n
    if which == "first":
        k = 1
        while k <= n:
            terms[k - 1] = 1
            k <<= 1
    elif which == "second":
        k = 1
        while k - 1 <= n:
            if k - 1 >= 1:
                terms[k - 2] = 1
            k <<= 1
    else:
        raise ValueError(f"which must be 'first' or 'second': {which!r}")
    return CoeffSeq(GF2, terms, origin=1)


def phi3_generalized_rueppel(b: BitSource, n: int) -> CoeffSeq:
    """Sparse sequence with ones at n_0 = 1, n_{h+1} = 2 n_h + b_h; origin 1."""
    if n < 1:
        raise ValueError("length must be >= 1")
    terms = [0] * n
    mark = 1
    h = 0
    while mark <= n:
        terms[mark - 1] = 1
        if 2 * mark > n:  # next mark overshoots either way; don't consume a bit
            break
        mark = 2 * mark + b.bit(h)
        h += 1
    return CoeffSeq(GF2, terms, origin=1)


def phi2_selector(b: BitSource, n: int) -> CoeffSeq:
    """a_0 = 1, a_{2n+1} = b_n, a_{2n+2} = a_n + b_n; origin 0.

    Every output satisfies the defining feedback relation, so the whole
    family is apwenian by construction.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    # b_m is used while 2m+1 <= n-1, i.e. for m <= (n-2)//2
    need = 0 if n == 1 else (n - 2) // 2 + 1
    bb = b.take(need)
    a = [0] * n
    a[0] = 1
    for i in range(1, n):
        m = (i - 1) // 2
        if i % 2 == 1:
            a[i] = bb[m]
        else:
            a[i] = (a[m] + bb[m]) % 2
    return CoeffSeq(GF2, a, origin=0)


def phi1_jacobi(b: BitSource, n: int) -> CoeffSeq:
    """Coefficients of the Jacobi-style continued fraction
    1/(1 + b_0 x + x^2/(1 + b_1 x + x^2/(...))), origin 0.

    The tower is evaluated bottom-up to depth ceil(n/2) + 1, which pins
    the first n coefficients exactly, then expanded as a power series.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    depth = (n + 1) // 2 + 1
    stream = b.take(depth)
    num, den = DensePoly.zero(GF2), DensePoly.one(GF2)
    x2 = DensePoly(GF2, (0, 0, 1))
    for bj in reversed(stream):
        num, den = den, DensePoly(GF2, (1, bj)) * den + x2 * num
    inv = series_inverse(TruncSeries(GF2, den.coeffs, n))
    prod = inv * TruncSeries(GF2, num.coeffs, n)
    return CoeffSeq(GF2, prod.coeffs, origin=0)


@lru_cache(maxsize=None)
def _pd_prefix(n):
    return tuple(morphism_fixed_point(UniformMorphism((1, 1), (1, 0)), n).terms)


_NAME_ALIASES = {"period-doubling": "pd", "z-seq": "z", "w-seq": "w"}


def named_sequence(name: str, n: int) -> CoeffSeq:
    """Named binary sequences.

    pd           fixed point of 1 -> 10, 0 -> 11 (origin 0)
    thue-morse   parity of the binary weight of n (origin 0)
    z            z_1 = 1, z_{2n} = 1 + z_n, z_{2n+1} = 1 (origin 1)
    w            w_1 = 1, w_{2n+1} = 1 + w_n, w_{2n} = 1 (origin 1)

    Long spellings period-doubling / z-seq / w-seq are accepted too.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    name = _NAME_ALIASES.get(name, name)
    if name == "pd":
        return CoeffSeq(GF2, _pd_prefix(n), origin=0)
    if name == "thue-morse":
        return CoeffSeq(GF2, [i.bit_count() & 1 for i in range(n)], origin=0)
    if name == "z":
        terms = [0] * (n + 1)
        terms[1] = 1
        for i in range(2, n + 1):
            terms[i] = 1 if i % 2 == 1 else (1 + terms[i // 2]) % 2
        return CoeffSeq(GF2, terms[1:], origin=1)
    if name == "w":
        terms = [0] * (n + 1)
        terms[1] = 1
        for i in range(2, n + 1):
            terms[i] = 1 if i % 2 == 0 else (1 + terms[i // 2]) % 2
        return CoeffSeq(GF2, terms[1:], origin=1)
    raise ValueError(f"unknown sequence name: {name!r}")


NAMED_SEQUENCES = ("pd", "thue-morse", "z", "w")


@dataclass(frozen=True)
class UniformMorphism:
    """Binary morphism sending 0 and 1 to words of one common length k."""

    image0: tuple
    image1: tuple

    def __post_init__(self):
        i0, i1 = tuple(self.image0), tuple(self.image1)
        object.__setattr__(self, "image0", i0)
        object.__setattr__(self, "image1", i1)
        if len(i0) != len(i1) or len(i0) < 2:
            raise ValueError("images must share one length >= 2")
        if not (set(i0) <= {0, 1} and set(i1) <= {0, 1}):
            raise ValueError("images must be over {0, 1}")

    @property
    def k(self):
        return len(self.image0)

    @property
    def prolongable(self):
        """True when iterating from the letter 1 extends the prefix."""
        return self.image1[0] == 1

    def __str__(self):
        one = "".join(map(str, self.image1))
        zero = "".join(map(str, self.image0))
        return f"1->{one}, 0->{zero}"


def morphism_fixed_point(m: UniformMorphism, n: int) -> CoeffSeq:
    """First n letters of the fixed point of m starting with 1; origin 0."""
    if n < 1:
        raise ValueError("length must be >= 1")
    if not m.prolongable:
        raise ValueError("morphism has no fixed point starting with 1")
    word = [1]
    while len(word) < n:
        word = [letter for a in word for letter in (m.image1 if a else m.image0)]
    return CoeffSeq(GF2, word[:n], origin=0)
