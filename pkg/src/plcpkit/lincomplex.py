"""Linear complexity profiles over F_p.

L(n) is the length of the shortest linear recurrence generating the
first n terms; the zero prefix has L = 0 and a sequence with no shorter
relation has L = n.  Profiles are produced incrementally; a direct
search (`lc_bruteforce`) over the definition serves as the independent
oracle and never sees the incremental algorithm's state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from plcpkit import _kernels
from plcpkit.field import CoeffSeq, DensePoly, GF2, PrimeField

__all__ = [
    "LCProfile",
    "BMState",
    "BerlekampMassey",
    "lcp_profile",
    "is_plcp",
    "lc_bruteforce",
    "recurrence_check",
    "expected_lc_exhaustive",
]


@dataclass(frozen=True)
class LCProfile:
    """Values L(1), ..., L(N); validated against the jump law on build."""

    field: PrimeField
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        prev = 0
        for i, l in enumerate(self.values):
            n = i + 1
            if not 0 <= l <= n:
                raise ValueError(f"L({n}) = {l} outside [0, {n}]")
            if l < prev:
                raise ValueError(f"profile decreases at n = {n}")
            if l != prev and l != n - prev:
                # a jump from L to a larger value must land on n - L
                raise ValueError(f"jump law violated at n = {n}: {prev} -> {l}")
            prev = l

    def __len__(self):
        return len(self.values)

    def value_at(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"profile covers n in [1, {len(self.values)}]")
        return self.values[n - 1]

    def __repr__(self):
        head = ",".join(map(str, self.values[:12]))
        tail = ",..." if len(self.values) > 12 else ""
        return f"LCProfile(F{self.field.p}, [{head}{tail}], len={len(self.values)})"


@dataclass(frozen=True)
class BMState:
    """Snapshot of the incremental synthesizer."""

    connection: DensePoly  # constant term 1, degree <= length
    previous: DensePoly
    length: int
    last_change: int  # position n of the last length change (-1 if none)
    last_discrepancy: int


class BerlekampMassey:
    """Incremental shortest-LFSR synthesis over F_p."""

    def __init__(self, field: PrimeField):
        self.field = field
        self._c = [1]
        self._b = [1]
        self._l = 0
        self._m = 1
        self._bd = 1  # discrepancy at the last length change
        self._last_change = -1
        self._last_d = 0
        self._terms = []

    @property
    def length(self):
        return self._l

    def push(self, s: int) -> int:
        """Feed one term, return the updated complexity."""
        field = self.field
        p = field.p
        a = self._terms
        n = len(a)
        a.append(s % p)
        d = a[n]
        for i in range(1, min(self._l, len(self._c) - 1) + 1):
            ci = self._c[i]
            if ci:
                d += ci * a[n - i]
        d %= p
        if d == 0:
            self._m += 1
            return self._l
        self._last_d = d
        coef = (d * field.inv(self._bd)) % p
        shifted = [0] * self._m + [(coef * x) % p for x in self._b]
        if 2 * self._l <= n:
            old = self._c[:]
            self._sub_inplace(shifted)
            self._b = old
            self._bd = d
            self._l = n + 1 - self._l
            self._last_change = n
            self._m = 1
        else:
            self._sub_inplace(shifted)
            self._m += 1
        return self._l

    def _sub_inplace(self, other):
        p = self.field.p
        if len(other) > len(self._c):
            self._c.extend([0] * (len(other) - len(self._c)))
        for i, x in enumerate(other):
            if x:
                self._c[i] = (self._c[i] - x) % p

    def connection_polynomial(self) -> DensePoly:
        return DensePoly(self.field, self._c)

    def state(self) -> BMState:
        return BMState(
            connection=DensePoly(self.field, self._c),
            previous=DensePoly(self.field, self._b),
            length=self._l,
            last_change=self._last_change,
            last_discrepancy=self._last_d,
        )


def lcp_profile(s: CoeffSeq) -> LCProfile:
    """Profile L(1..N) of an origin-1 sequence."""
    if s.origin != 1:
        raise ValueError("profile expects an origin-1 sequence; use shift_index(1)")
    if s.field.p == 2:
        return LCProfile(s.field, tuple(_kernels.lcp_profile(list(s.terms))))
    bm = BerlekampMassey(s.field)
    return LCProfile(s.field, tuple(bm.push(t) for t in s.terms))


def is_plcp(profile: LCProfile) -> bool:
    """True when L(n) = ceil(n/2) for every covered n."""
    return all(l == (i + 2) // 2 for i, l in enumerate(profile.values))


def _has_recurrence(terms, k, field):
    # is there c_1..c_k with a(i+k) = sum_j c_j a(i+k-j) on the whole prefix?
    n = len(terms)
    if k == 0:
        return all(t == 0 for t in terms)
    if k >= n:
        return True
    p = field.p
    if p == 2 and k <= 12:
        # exhaustive over all 2^k coefficient vectors, early exit per row
        window = terms
        for massk in range(1 << k):
            ok = True
            for i in range(n - k):
                acc = 0
                mm = massk
                j = 1
                while mm:
                    if mm & 1:
                        acc ^= window[i + k - j]
                    mm >>= 1
                    j += 1
                if acc != window[i + k]:
                    ok = False
                    break
            if ok:
                return True
        return False
    # solvability of the definitional linear system
    rows = []
    for i in range(n - k):
        rows.append([terms[i + k - j] % p for j in range(1, k + 1)] + [terms[i + k] % p])
    cols = k
    rank_row = 0
    for col in range(cols):
        piv = None
        for r in range(rank_row, len(rows)):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank_row], rows[piv] = rows[piv], rows[rank_row]
        inv = field.inv(rows[rank_row][col])
        rows[rank_row] = [(x * inv) % p for x in rows[rank_row]]
        for r in range(len(rows)):
            if r != rank_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank_row])]
        rank_row += 1
    # inconsistent iff some row is 0 ... 0 | nonzero
    for r in rows:
        if any(x % p for x in r[:cols]):
            continue
        if r[cols] % p:
            return False
    return True


def lc_bruteforce(s: CoeffSeq, n: int) -> int:
    """L(n) straight from the definition; independent of the profile code."""
    if s.origin != 1:
        raise ValueError("expects an origin-1 sequence; use shift_index(1)")
    if not 1 <= n <= len(s):
        raise ValueError(f"n must be in [1, {len(s)}]")
    if n > 24:
        raise ValueError("brute-force bound exceeded (n <= 24)")
    terms = list(s.terms[:n])
    for k in range(n + 1):
        if _has_recurrence(terms, k, s.field):
            return k
    raise AssertionError("unreachable: k = n always satisfies")


def recurrence_check(s: CoeffSeq) -> bool:
    """Feedback relation for binary sequences with a leading one.

    Origin 1 checks s(2n+1) = s(2n) + s(n) for n >= 1; origin 0 checks
    c(2n+2) = c(2n+1) + c(n) for n >= 0 — the same relation under the
    index shift c(n) = s(n+1).
    """
    if s.field.p != 2:
        raise ValueError("recurrence check is defined over F2")
    if s.terms[0] != 1:
        raise ValueError("requires leading term 1")
    t = s.terms
    nn = len(t)
    if s.origin == 1:
        # t[i] = s(i+1)
        n = 1
        while 2 * n + 1 <= nn:
            if t[2 * n] != (t[2 * n - 1] + t[n - 1]) % 2:
                return False
            n += 1
        return True
    n = 0
    while 2 * n + 2 <= nn - 1:
        if t[2 * n + 2] != (t[2 * n + 1] + t[n]) % 2:
            return False
        n += 1
    return True


def expected_lc_exhaustive(n: int) -> Fraction:
    """Exact mean of L(n) over all 2^n binary sequences."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 16:
        raise ValueError("exhaustive bound exceeded (n <= 16)")
    total = 0
    profile = _kernels.lcp_profile
    for x in range(1 << n):
        bits = [(x >> i) & 1 for i in range(n)]
        total += profile(bits)[-1]
    return Fraction(total, 1 << n)
