"""Continued fractions of formal Laurent series and of rational functions.

A sequence prefix s_1..s_N determines the series sum s_n t^{-n} modulo
t^{-(N+1)}.  Partial quotients are extracted by repeated polynomial-part
removal with truncated series inversion; a quotient is recorded as
*guaranteed* only while twice the accumulated denominator degree stays
within N, which is exactly the range the input pins down.  Quotients are
stored monic with the stripped leading units kept alongside.
"""

from __future__ import annotations

from dataclasses import dataclass

from plcpkit import _kernels
from plcpkit.field import CoeffSeq, DensePoly, PrimeField, poly_divmod, poly_gcd
from plcpkit.lincomplex import LCProfile

__all__ = [
    "ContinuedFraction",
    "ConvergentPair",
    "laurent_cf",
    "rational_cf",
    "convergents",
    "profile_from_cf",
    "max_pq_degree",
    "has_flat_expansion",
    "orthogonal_multiplicity",
    "series_prefix_of_fraction",
]


@dataclass(frozen=True)
class ContinuedFraction:
    """[a_0; a_1, a_2, ...] with monic partial quotients and their units.

    The actual j-th quotient is units[j-1] * quotients[j-1]; over F2 all
    units are 1.  `guaranteed_count` says how many leading quotients are
    certified by the input precision; `next_degree_bound` is a lower
    bound on the degree of the next (unseen) quotient, or None when the
    expansion terminated exactly (rational input).
    """

    field: PrimeField
    integer_part: DensePoly
    quotients: tuple
    units: tuple
    guaranteed_count: int
    next_degree_bound: int | None

    def __post_init__(self):
        if len(self.quotients) != len(self.units):
            raise ValueError("quotients and units must align")
        if not 0 <= self.guaranteed_count <= len(self.quotients):
            raise ValueError("bad guaranteed_count")
        for q in self.quotients:
            if q.is_zero or q.degree < 1:
                raise ValueError("partial quotients must have degree >= 1")
            if q.lc != 1:
                raise ValueError("stored quotients must be monic")
        for u in self.units:
            if not 1 <= u < self.field.p:
                raise ValueError("units must be nonzero residues")
        if self.next_degree_bound is not None and self.next_degree_bound < 1:
            raise ValueError("next_degree_bound must be >= 1")

    def partial_quotient(self, j: int) -> DensePoly:
        """The actual a_j (unit times monic), j >= 1."""
        if not 1 <= j <= len(self.quotients):
            raise IndexError(f"have quotients a_1..a_{len(self.quotients)}")
        return self.units[j - 1] * self.quotients[j - 1]

    def degrees(self) -> tuple:
        return tuple(q.degree for q in self.quotients)

    def __len__(self):
        return len(self.quotients)


@dataclass(frozen=True)
class ConvergentPair:
    index: int
    p: DensePoly
    q: DensePoly


def laurent_cf(s: CoeffSeq) -> ContinuedFraction:
    """Continued fraction of sum s_n t^{-n} from an origin-1 prefix."""
    if s.origin != 1:
        raise ValueError("expects an origin-1 sequence; use shift_index(1)")
    fld = s.field
    if fld.p == 2:
        packed, bound = _kernels.laurent_cf(list(s.terms))
        quotients = tuple(
            DensePoly(fld, _kernels.unpack_bits(q, q.bit_length())) for q in packed
        )
        return ContinuedFraction(
            field=fld,
            integer_part=DensePoly.zero(fld),
            quotients=quotients,
            units=(1,) * len(quotients),
            guaranteed_count=len(quotients),
            next_degree_bound=bound,
        )
    p = fld.p
    n = len(s.terms)
    # r[i] = coefficient of x^i (x = 1/t); known for 1 <= i <= k
    r = [0] + list(s.terms)
    k = n
    monics = []
    units = []
    while True:
        v = next((i for i in range(1, k + 1) if r[i]), None)
        if v is None:
            return ContinuedFraction(
                field=fld,
                integer_part=DensePoly.zero(fld),
                quotients=tuple(monics),
                units=tuple(units),
                guaranteed_count=len(monics),
                next_degree_bound=k + 1 if k >= 1 else 1,
            )
        if 2 * v > k:
            return ContinuedFraction(
                field=fld,
                integer_part=DensePoly.zero(fld),
                quotients=tuple(monics),
                units=tuple(units),
                guaranteed_count=len(monics),
                next_degree_bound=v,
            )
        prec = k - v + 1
        u = r[v : v + prec]
        # schoolbook inverse of the unit part, mod x^prec
        u0i = fld.inv(u[0])
        iu = [u0i]
        for m in range(1, prec):
            acc = 0
            for i in range(1, m + 1):
                if i < len(u) and u[i]:
                    acc += u[i] * iu[m - i]
            iu.append((-u0i * acc) % p)
        quotient = DensePoly(fld, [iu[v - j] for j in range(v + 1)])
        unit, monic = quotient.monic()
        monics.append(monic)
        units.append(unit)
        k -= 2 * v
        r = [0] + [iu[v + m] for m in range(1, k + 1)]


def rational_cf(f: DensePoly, g: DensePoly) -> ContinuedFraction:
    """Exact continued fraction of f/g by the division algorithm."""
    if f.field != g.field:
        raise ValueError("mixed fields")
    if g.is_zero:
        raise ZeroDivisionError("zero denominator")
    a0, rem = poly_divmod(f, g)
    monics = []
    units = []
    num, den = g, rem
    while not den.is_zero:
        q, rem = poly_divmod(num, den)
        unit, monic = q.monic()
        monics.append(monic)
        units.append(unit)
        num, den = den, rem
    return ContinuedFraction(
        field=f.field,
        integer_part=a0,
        quotients=tuple(monics),
        units=tuple(units),
        guaranteed_count=len(monics),
        next_degree_bound=None,
    )


def convergents(cf: ContinuedFraction, j_max: int | None = None) -> list:
    """Convergent pairs (P_j, Q_j) for j = 0..j_max via the three-term rule."""
    if j_max is None:
        j_max = len(cf.quotients)
    if not 0 <= j_max <= len(cf.quotients):
        raise ValueError(f"j_max must be in [0, {len(cf.quotients)}]")
    fld = cf.field
    p_prev, q_prev = DensePoly.one(fld), DensePoly.zero(fld)
    p_cur, q_cur = cf.integer_part, DensePoly.one(fld)
    out = [ConvergentPair(0, p_cur, q_cur)]
    for j in range(1, j_max + 1):
        a = cf.partial_quotient(j)
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        out.append(ConvergentPair(j, p_cur, q_cur))
    return out


def profile_from_cf(cf: ContinuedFraction, n_max: int) -> LCProfile:
    """Linear complexity profile determined by the partial quotient degrees.

    L(n) equals the accumulated denominator degree D_j on the block
    D_{j-1} + D_j <= n < D_j + D_{j+1}.  Only guaranteed quotients are
    used and the result is clipped to the range they actually pin down,
    never padded.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    degs = [int(q.degree) for q in cf.quotients[: cf.guaranteed_count]]
    cum = [0]
    for d in degs:
        cum.append(cum[-1] + d)
    g = len(degs)
    if cf.next_degree_bound is None:
        next_cum = None  # expansion terminated: the last block extends forever
    else:
        next_cum = cum[g] + cf.next_degree_bound
    covered = n_max if next_cum is None else min(n_max, cum[g] + next_cum - 1)
    values = []
    j = 0
    for n in range(1, covered + 1):
        while j < g and n >= cum[j] + cum[j + 1]:
            j += 1
        values.append(cum[j])
    return LCProfile(cf.field, tuple(values))


def max_pq_degree(cf: ContinuedFraction) -> int:
    """Largest degree among the guaranteed partial quotients."""
    if cf.guaranteed_count == 0:
        raise ValueError("no guaranteed partial quotients")
    return max(int(q.degree) for q in cf.quotients[: cf.guaranteed_count])


def has_flat_expansion(cf: ContinuedFraction, n: int) -> bool:
    """All partial quotients of degree 1, as far as n terms can certify.

    The finite stand-in for "infinite expansion, every quotient linear":
    the extraction must have run to its precision limit (floor(n/2)
    guaranteed quotients — no early termination, which would signal a
    rational series), every guaranteed quotient must have degree exactly
    1, and the data must not already force the next quotient to be
    larger (next_degree_bound 1).  The last clause only bites for odd n,
    where half a term of evidence about quotient n//2 + 1 exists.
    """
    if cf.guaranteed_count != n // 2:
        return False
    if cf.next_degree_bound != 1:
        return False
    return all(q.degree == 1 for q in cf.quotients[: cf.guaranteed_count])


def series_prefix_of_fraction(f: DensePoly, g: DensePoly, n: int) -> CoeffSeq:
    """First n Laurent tail coefficients s_1..s_n of f/g (deg f < deg g)."""
    if g.is_zero:
        raise ZeroDivisionError("zero denominator")
    if not f.degree < g.degree:
        raise ValueError("needs deg f < deg g")
    if n < 1:
        raise ValueError("n must be >= 1")
    shifted = f.shift(n)
    q, _ = poly_divmod(shifted, g)
    terms = [q.coefficient(n - m) for m in range(1, n + 1)]
    return CoeffSeq(f.field, terms, origin=1)


def orthogonal_multiplicity(g: DensePoly) -> int:
    """Number of f, deg f < deg g, coprime to g, whose f/g expansion has
    all partial quotients of degree 1."""
    fld = g.field
    d = g.degree
    if g.is_zero or d < 1:
        raise ValueError("g must have degree >= 1")
    if g.lc != 1:
        raise ValueError("g must be monic")
    if fld.p ** d > 1 << 14:
        raise ValueError("exhaustive bound exceeded (p^deg g <= 2^14)")
    count = 0
    coeffs = [0] * d
    total = fld.p ** d
    for idx in range(1, total):
        x = idx
        for i in range(d):
            coeffs[i] = x % fld.p
            x //= fld.p
        f = DensePoly(fld, coeffs)
        if poly_gcd(f, g).degree != 0:
            continue
        cf = rational_cf(f, g)
        if cf.quotients and all(q.degree == 1 for q in cf.quotients):
            count += 1
    return count
