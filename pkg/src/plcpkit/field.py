"""Exact arithmetic over prime fields F_p.

Residues are plain ints in [0, p); the containers validate on
construction, so a value never leaves the range.  `DensePoly` stores
coefficients ascending by degree with no trailing zeros, `CoeffSeq` is a
finite sequence prefix with an explicit index origin (0 or 1), and
`TruncSeries` is a truncated power series that records how many
coefficients are actually known instead of silently inventing zeros.
"""

from __future__ import annotations

import re

__all__ = [
    "NEG_INF",
    "PrimeField",
    "GF2",
    "DensePoly",
    "CoeffSeq",
    "TruncSeries",
    "poly_divmod",
    "poly_gcd",
    "series_inverse",
    "series_derivative",
    "SequenceFormatError",
    "loads_sequence",
    "dumps_sequence",
    "read_sequence",
    "write_sequence",
]

# degree of the zero polynomial: orders strictly below every int
NEG_INF = float("-inf")


def _is_prime(n):
    # deterministic for the supported range (n < 2^16): trial division
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Prime field F_p, p < 2^16, with residues as plain ints."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p >= 1 << 16:
            raise ValueError(f"field modulus must be an int in [2, 2^16): {p!r}")
        if not _is_prime(p):
            raise ValueError(f"field modulus is not prime: {p}")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def reduce(self, a: int) -> int:
        return a % self.p

    def validate(self, values) -> tuple:
        out = tuple(values)
        for v in out:
            if not isinstance(v, int) or not 0 <= v < self.p:
                raise ValueError(f"not a residue mod {self.p}: {v!r}")
        return out

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


GF2 = PrimeField(2)


def _check_same_field(a, b):
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field!r} vs {b.field!r}")


class DensePoly:
    """Dense polynomial over F_p, coefficients ascending, canonical form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs=()):
        cs = [c % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def t(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        if degree < 0:
            raise ValueError("negative degree")
        return cls(field, (0,) * degree + (coeff,))

    @property
    def degree(self):
        """Degree; NEG_INF (below every int) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        _check_same_field(self, other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return DensePoly(self.field, out)

    def __neg__(self):
        p = self.field.p
        return DensePoly(self.field, [-c % p for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DensePoly(self.field, [c * other for c in self.coeffs])
        _check_same_field(self, other)
        if self.is_zero or other.is_zero:
            return DensePoly.zero(self.field)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        return DensePoly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self):
        """Return (unit, monic) with self == unit * monic; zero -> (1, 0)."""
        if self.is_zero:
            return 1, self
        u = self.lc
        if u == 1:
            return 1, self
        ui = self.field.inv(u)
        return u, DensePoly(self.field, [c * ui for c in self.coeffs])

    def shift(self, k: int):
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return DensePoly(self.field, (0,) * k + self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, DensePoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def to_string(self, var="t"):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DensePoly(F{self.field.p}, {self.to_string()})"


def poly_divmod(a: DensePoly, b: DensePoly):
    """Quotient and remainder with deg(remainder) < deg(divisor)."""
    _check_same_field(a, b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    field = a.field
    p = field.p
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return DensePoly.zero(field), a
    binv = field.inv(b.lc)
    rem = list(a.coeffs)
    quo = [0] * (len(rem) - db)
    for i in range(len(quo) - 1, -1, -1):
        c = (rem[i + db] * binv) % p
        if c:
            quo[i] = c
            for j, bj in enumerate(b.coeffs):
                rem[i + j] = (rem[i + j] - c * bj) % p
    return DensePoly(field, quo), DensePoly(field, rem[:db])


def poly_gcd(a: DensePoly, b: DensePoly) -> DensePoly:
    """Monic gcd (zero if both inputs are zero)."""
    _check_same_field(a, b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()[1]


class CoeffSeq:
    """Finite sequence prefix over F_p with index origin 0 or 1.

    ``seq[n]`` uses the absolute index: an origin-1 sequence of length N
    is defined for n in [1, N], an origin-0 one for n in [0, N-1].
    """

    __slots__ = ("field", "terms", "origin")

    def __init__(self, field: PrimeField, terms, origin: int):
        if origin not in (0, 1):
            raise ValueError(f"origin must be 0 or 1: {origin!r}")
        tt = field.validate(terms)
        if not tt:
            raise ValueError("empty sequence")
        self.field = field
        self.terms = tt
        self.origin = origin

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n: int) -> int:
        i = n - self.origin
        if not 0 <= i < len(self.terms):
            raise IndexError(f"index {n} outside [{self.origin}, {self.origin + len(self.terms) - 1}]")
        return self.terms[i]

    def shift_index(self, origin: int) -> "CoeffSeq":
        """Relabel the same stored terms with a different origin."""
        if origin == self.origin:
            return self
        return CoeffSeq(self.field, self.terms, origin)

    def __eq__(self, other):
        return (
            isinstance(other, CoeffSeq)
            and other.field == self.field
            and other.origin == self.origin
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field.p, self.origin, self.terms))

    def __repr__(self):
        head = ",".join(map(str, self.terms[:12]))
        tail = ",..." if len(self.terms) > 12 else ""
        return f"CoeffSeq(F{self.field.p}, origin={self.origin}, [{head}{tail}], len={len(self.terms)})"


class TruncSeries:
    """Power series in x known modulo x^precision.

    ``direction`` is "power" when coefficient i means the t^i
    coefficient, "laurent-tail" when it means the t^{-i} coefficient
    (x = 1/t).  Arithmetic keeps the minimum precision of its operands;
    the only ways precision grows are squaring in characteristic 2 and
    an explicit shift by x^k.
    """

    __slots__ = ("field", "coeffs", "precision", "direction")

    def __init__(self, field: PrimeField, coeffs, precision: int, direction="power"):
        if direction not in ("power", "laurent-tail"):
            raise ValueError(f"bad direction: {direction!r}")
        if precision < 0:
            raise ValueError("negative precision")
        cs = list(coeffs)
        if len(cs) > precision:
            cs = cs[:precision]
        else:
            cs = cs + [0] * (precision - len(cs))
        self.field = field
        self.coeffs = field.validate(cs)
        self.precision = precision
        self.direction = direction

    @classmethod
    def from_coeffseq(cls, seq: CoeffSeq) -> "TruncSeries":
        """View a sequence prefix as a series.

        Origin 0 gives the generating function sum c_n t^n known mod
        t^N; origin 1 gives the Laurent tail sum s_n t^{-n}, recorded in
        x = 1/t with a zero constant term and precision N + 1.
        """
        if seq.origin == 0:
            return cls(seq.field, seq.terms, len(seq.terms), "power")
        return cls(seq.field, (0,) + seq.terms, len(seq.terms) + 1, "laurent-tail")

    @classmethod
    def constant(cls, field, value, precision, direction="power"):
        return cls(field, (value,), precision, direction)

    def coefficient(self, i: int) -> int:
        if not 0 <= i < self.precision:
            raise IndexError(f"coefficient {i} beyond precision {self.precision}")
        return self.coeffs[i]

    def _align(self, other):
        _check_same_field(self, other)
        if self.direction != other.direction:
            raise ValueError("mixed series directions")
        return min(self.precision, other.precision)

    def __add__(self, other):
        pr = self._align(other)
        p = self.field.p
        return TruncSeries(
            self.field,
            [(a + b) % p for a, b in zip(self.coeffs[:pr], other.coeffs[:pr])],
            pr,
            self.direction,
        )

    def __sub__(self, other):
        pr = self._align(other)
        p = self.field.p
        return TruncSeries(
            self.field,
            [(a - b) % p for a, b in zip(self.coeffs[:pr], other.coeffs[:pr])],
            pr,
            self.direction,
        )

    def __mul__(self, other):
        pr = self._align(other)
        p = self.field.p
        out = [0] * pr
        for i, ai in enumerate(self.coeffs[:pr]):
            if ai:
                for j, bj in enumerate(other.coeffs[: pr - i]):
                    if bj:
                        out[i + j] = (out[i + j] + ai * bj) % p
        return TruncSeries(self.field, out, pr, self.direction)

    def square(self):
        """Square; in characteristic 2 the known precision doubles."""
        if self.field.p != 2:
            return self * self
        out = [0] * (2 * self.precision)
        for i, c in enumerate(self.coeffs):
            if c:
                out[2 * i] = 1
        return TruncSeries(self.field, out, 2 * self.precision, self.direction)

    def shift(self, k: int):
        """Multiply by x^k; the product is known mod x^(precision+k)."""
        if k < 0:
            raise ValueError("negative shift")
        return TruncSeries(
            self.field, (0,) * k + self.coeffs, self.precision + k, self.direction
        )

    def truncate(self, precision: int):
        if precision > self.precision:
            raise ValueError("cannot extend precision by truncation")
        return TruncSeries(self.field, self.coeffs[:precision], precision, self.direction)

    def valuation(self):
        """Index of the first known nonzero coefficient, or None."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def agrees_with(self, other) -> bool:
        """Equality on the common known range."""
        pr = self._align(other)
        return self.coeffs[:pr] == other.coeffs[:pr]

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and other.field == self.field
            and other.direction == self.direction
            and other.precision == self.precision
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.direction, self.precision, self.coeffs))

    def __repr__(self):
        head = ",".join(map(str, self.coeffs[:12]))
        tail = ",..." if self.precision > 12 else ""
        return f"TruncSeries(F{self.field.p}, [{head}{tail}], prec={self.precision}, {self.direction})"


def series_inverse(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse mod x^precision; needs a unit constant term."""
    if f.precision == 0:
        raise ValueError("cannot invert a series with no known coefficients")
    if f.coeffs[0] == 0:
        raise ValueError("series has zero constant term, not invertible")
    if f.field.p == 2:
        from plcpkit import _kernels

        return TruncSeries(
            f.field, _kernels.series_inverse(list(f.coeffs)), f.precision, f.direction
        )
    p = f.field.p
    f0i = f.field.inv(f.coeffs[0])
    inv = [f0i]
    for m in range(1, f.precision):
        s = 0
        for i in range(1, m + 1):
            fi = f.coeffs[i]
            if fi:
                s += fi * inv[m - i]
        inv.append((-f0i * s) % p)
    return TruncSeries(f.field, inv, f.precision, f.direction)


def series_derivative(f: TruncSeries) -> TruncSeries:
    """Formal derivative; one coefficient of precision is honestly lost."""
    if f.precision == 0:
        raise ValueError("cannot differentiate a series with no known coefficients")
    p = f.field.p
    out = [((i + 1) * c) % p for i, c in enumerate(f.coeffs[1:])]
    return TruncSeries(f.field, out, f.precision - 1, f.direction)


# ---------------------------------------------------------------------------
# sequence file format
#
#   # field=<p> origin=<0|1> length=<N>
#   1 1 0 1 0 0 0 1
#
# Residues are whitespace separated; for p = 2 the compact form
# ``bits=11010001`` is also accepted, and is what the writer emits.


class SequenceFormatError(ValueError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


_HEADER_RE = re.compile(r"^#\s*field=(\d+)\s+origin=([01])\s+length=(\d+)\s*$")


def loads_sequence(text: str) -> CoeffSeq:
    lines = text.splitlines()
    header_idx = None
    for i, ln in enumerate(lines):
        if ln.strip():
            header_idx = i
            break
    if header_idx is None:
        raise SequenceFormatError("empty input, expected a header line", 1, 1)
    m = _HEADER_RE.match(lines[header_idx].strip())
    if not m:
        raise SequenceFormatError(
            "malformed header, expected '# field=<p> origin=<0|1> length=<N>'",
            header_idx + 1,
            1,
        )
    try:
        field = PrimeField(int(m.group(1)))
    except ValueError as e:
        raise SequenceFormatError(str(e), header_idx + 1, 1) from None
    origin = int(m.group(2))
    length = int(m.group(3))
    if length < 1:
        raise SequenceFormatError("length must be >= 1", header_idx + 1, 1)

    terms = []
    last_line = header_idx + 1
    for i in range(header_idx + 1, len(lines)):
        ln = lines[i]
        if not ln.strip():
            continue
        last_line = i + 1
        stripped = ln.strip()
        if stripped.startswith("bits="):
            if field.p != 2:
                raise SequenceFormatError(
                    "bits= form is only valid for field=2", i + 1, 1
                )
            if terms:
                raise SequenceFormatError("bits= after residue data", i + 1, 1)
            offset = ln.index("bits=") + len("bits=")
            for j, ch in enumerate(stripped[len("bits=") :]):
                if ch not in "01":
                    raise SequenceFormatError(
                        f"bad bit {ch!r}", i + 1, offset + j + 1
                    )
                terms.append(int(ch))
            continue
        col = 0
        for tok in re.finditer(r"\S+", ln):
            col = tok.start() + 1
            word = tok.group()
            try:
                v = int(word, 10)
            except ValueError:
                raise SequenceFormatError(
                    f"bad residue {word!r}", i + 1, col
                ) from None
            if not 0 <= v < field.p:
                raise SequenceFormatError(
                    f"residue {v} out of range for field={field.p}", i + 1, col
                )
            terms.append(v)
    if len(terms) != length:
        raise SequenceFormatError(
            f"expected {length} values, found {len(terms)}", last_line, 1
        )
    return CoeffSeq(field, terms, origin)


def dumps_sequence(seq: CoeffSeq) -> str:
    header = f"# field={seq.field.p} origin={seq.origin} length={len(seq)}"
    if seq.field.p == 2:
        return header + "\nbits=" + "".join(map(str, seq.terms)) + "\n"
    body = []
    for i in range(0, len(seq.terms), 32):
        body.append(" ".join(map(str, seq.terms[i : i + 32])))
    return header + "\n" + "\n".join(body) + "\n"


def read_sequence(path) -> CoeffSeq:
    with open(path, "r", encoding="ascii") as fh:
        return loads_sequence(fh.read())


def write_sequence(seq: CoeffSeq, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_sequence(seq))
