"""Hankel determinants of sequence prefixes, modular and exact.

H_n is the determinant of the n x n matrix with entry (i, j) = c_{i+j},
built from an origin-0 prefix.  Each order is eliminated independently —
no determinant is derived from a neighbouring order, so any single
wrong value is caught by the cross-checks instead of propagating.  For
+-1 integer matrices the fraction-free (Bareiss) elimination gives exact
integer values.
"""

from __future__ import annotations

from dataclasses import dataclass

from plcpkit import _kernels
from plcpkit.field import CoeffSeq, PrimeField

__all__ = [
    "HankelReport",
    "hankel_mod_p",
    "is_apwenian_hankel",
    "is_apwenian_recurrence",
    "hankel_integer_pm1",
    "ApwwResult",
    "apww_check",
]


@dataclass(frozen=True)
class HankelReport:
    """Determinants H_1..H_max_order; modulus None means exact integers."""

    modulus: int | None
    values: tuple
    max_order: int
    source_length: int

    def __post_init__(self):
        if len(self.values) != self.max_order:
            raise ValueError("values must cover orders 1..max_order")


def _det_mod_p(rows, field: PrimeField, pivot: str = "row") -> int:
    """Gaussian elimination determinant mod p.

    pivot="row" searches down the current column, pivot="col" searches
    along the current row (swapping columns); both must agree, which the
    tests use as a pivot-independence check.
    """
    p = field.p
    n = len(rows)
    m = [list(r) for r in rows]
    det = 1
    for step in range(n):
        if m[step][step] % p == 0:
            if pivot == "row":
                k = next((r for r in range(step + 1, n) if m[r][step] % p), None)
                if k is None:
                    return 0
                m[step], m[k] = m[k], m[step]
            elif pivot == "col":
                k = next((c for c in range(step + 1, n) if m[step][c] % p), None)
                if k is None:
                    return 0
                for r in range(n):
                    m[r][step], m[r][k] = m[r][k], m[r][step]
            else:
                raise ValueError(f"unknown pivot strategy: {pivot!r}")
            det = -det
        piv = m[step][step] % p
        det = (det * piv) % p
        inv = field.inv(piv)
        for r in range(step + 1, n):
            f = (m[r][step] * inv) % p
            if f:
                for c in range(step, n):
                    m[r][c] = (m[r][c] - f * m[step][c]) % p
    return det % p


def hankel_mod_p(c: CoeffSeq, max_order: int, pivot: str = "row") -> HankelReport:
    """H_1..H_max_order of an origin-0 prefix, reduced mod p."""
    if c.origin != 0:
        raise ValueError("expects an origin-0 sequence; use shift_index(0)")
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if 2 * max_order - 1 > len(c):
        raise ValueError(
            f"insufficient terms: order {max_order} needs {2 * max_order - 1}, have {len(c)}"
        )
    if c.field.p == 2 and pivot == "row":
        values = tuple(_kernels.hankel_parities(list(c.terms), max_order))
    else:
        t = c.terms
        values = tuple(
            _det_mod_p([t[i : i + n] for i in range(n)], c.field, pivot)
            for n in range(1, max_order + 1)
        )
    return HankelReport(
        modulus=c.field.p,
        values=values,
        max_order=max_order,
        source_length=len(c),
    )


def is_apwenian_hankel(c: CoeffSeq) -> bool:
    """Every computable H_n (n <= (N+1)//2) is odd, via the determinants."""
    if c.field.p != 2:
        raise ValueError("apwenian predicates are defined over F2")
    if c.origin != 0:
        raise ValueError("expects an origin-0 sequence; use shift_index(0)")
    if c.terms[0] != 1:
        raise ValueError("requires leading term 1")
    report = hankel_mod_p(c, (len(c) + 1) // 2)
    return all(v == 1 for v in report.values)


def is_apwenian_recurrence(c: CoeffSeq) -> bool:
    """Same predicate through the linear-time feedback relation."""
    from plcpkit.lincomplex import recurrence_check

    if c.origin != 0:
        raise ValueError("expects an origin-0 sequence; use shift_index(0)")
    return recurrence_check(c)


def _bareiss_det(rows) -> int:
    """Fraction-free elimination; exact integer determinant."""
    n = len(rows)
    m = [[int(x) for x in r] for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def hankel_integer_pm1(entries, max_order: int) -> HankelReport:
    """Exact integer H_1..H_max_order for a +-1 entry list."""
    ee = list(entries)
    for e in ee:
        if e not in (1, -1):
            raise ValueError(f"entries must be +-1: {e!r}")
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if 2 * max_order - 1 > len(ee):
        raise ValueError(
            f"insufficient terms: order {max_order} needs {2 * max_order - 1}, have {len(ee)}"
        )
    values = tuple(
        _bareiss_det([ee[i : i + n] for i in range(n)]) for n in range(1, max_order + 1)
    )
    return HankelReport(
        modulus=None, values=values, max_order=max_order, source_length=len(ee)
    )


@dataclass(frozen=True)
class ApwwResult:
    """Outcome of the scaled-parity check on +-1 Thue-Morse determinants."""

    ok: bool
    max_order: int
    quotients: tuple  # H_n / 2^(n-1), one per order
    first_failure: int | None

    def __bool__(self):
        return self.ok


def apww_check(max_order: int) -> ApwwResult:
    """H_n of ((-1)^(weight of n)) is 2^(n-1) times an odd integer."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    entries = [1 - 2 * (i.bit_count() & 1) for i in range(2 * max_order - 1)]
    report = hankel_integer_pm1(entries, max_order)
    quotients = []
    for n, h in enumerate(report.values, start=1):
        q, rem = divmod(h, 1 << (n - 1))
        if rem != 0 or q % 2 != 1:
            return ApwwResult(False, max_order, tuple(quotients), n)
        quotients.append(q)
    return ApwwResult(True, max_order, tuple(quotients), None)
