import pytest
from hypothesis import given, strategies as st

from plcpkit.field import (
    GF2,
    NEG_INF,
    CoeffSeq,
    DensePoly,
    PrimeField,
    SequenceFormatError,
    TruncSeries,
    dumps_sequence,
    loads_sequence,
    poly_gcd,
    series_derivative,
    series_inverse,
)

primes = st.sampled_from([2, 3, 5, 7, 13])


@st.composite
def field_and_elems(draw, count=2):
    p = draw(primes)
    f = PrimeField(p)
    return (f,) + tuple(draw(st.integers(0, p - 1)) for _ in range(count))


@st.composite
def field_poly(draw, max_deg=8):
    p = draw(primes)
    f = PrimeField(p)
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=0, max_size=max_deg + 1))
    return DensePoly(f, coeffs)


def test_prime_field_rejects_composites():
    for n in (0, 1, 4, 6, 9, 91):
        with pytest.raises(ValueError):
            PrimeField(n)


def test_gf2_is_prime_field_two():
    assert GF2.p == 2
    assert GF2.add(1, 1) == 0
    assert GF2.inv(1) == 1


@given(field_and_elems())
def test_field_ops_match_int_arithmetic(fab):
    f, a, b = fab
    assert f.add(a, b) == (a + b) % f.p
    assert f.sub(a, b) == (a - b) % f.p
    assert f.mul(a, b) == (a * b) % f.p
    assert f.neg(a) == (-a) % f.p


@given(field_and_elems(count=1))
def test_field_inverse(fa):
    f, a = fa
    if a == 0:
        with pytest.raises(ZeroDivisionError):
            f.inv(a)
    else:
        assert f.mul(a, f.inv(a)) == 1


def test_poly_basics():
    f = PrimeField(3)
    z = DensePoly.zero(f)
    assert z.degree == NEG_INF
    assert DensePoly.one(f).degree == 0
    t = DensePoly.t(f)
    assert t.degree == 1
    assert (t * t + DensePoly.one(f)).coeffs == (1, 0, 1)
    # trailing zeros are normalized away
    assert DensePoly(f, [1, 2, 0, 0]).coeffs == (1, 2)


@given(field_poly(), field_poly())
def test_poly_ring_axioms(a, b):
    if a.field.p != b.field.p:
        b = DensePoly(a.field, [c % a.field.p for c in b.coeffs])
    assert (a + b) - b == a
    assert a * b == b * a
    if a.degree is not NEG_INF and b.degree is not NEG_INF:
        assert (a * b).degree == a.degree + b.degree


@given(field_poly(), field_poly())
def test_poly_divmod_invariant(a, d):
    if a.field.p != d.field.p:
        d = DensePoly(a.field, [c % a.field.p for c in d.coeffs])
    if d.degree is NEG_INF:
        with pytest.raises(ZeroDivisionError):
            divmod(a, d)
        return
    q, r = divmod(a, d)
    assert q * d + r == a
    assert r.degree is NEG_INF or r.degree < d.degree


@given(field_poly(max_deg=6), field_poly(max_deg=6))
def test_gcd_divides_both(a, b):
    if a.field.p != b.field.p:
        b = DensePoly(a.field, [c % a.field.p for c in b.coeffs])
    g = poly_gcd(a, b)
    if g.degree is NEG_INF:
        assert a.degree is NEG_INF and b.degree is NEG_INF
        return
    assert g.lc == 1  # monic normalization
    assert (a % g).degree is NEG_INF
    assert (b % g).degree is NEG_INF


def test_monic_splits_unit():
    f = PrimeField(5)
    poly = DensePoly(f, [1, 2, 3])
    unit, monic = poly.monic()
    assert monic.lc == 1
    assert DensePoly(f, [unit]) * monic == poly


def test_poly_to_string():
    f = PrimeField(3)
    assert DensePoly(f, [2, 0, 1]).to_string() == "t^2 + 2"
    assert DensePoly(f, [0, 1]).to_string() == "t"
    assert DensePoly.zero(f).to_string() == "0"


class TestCoeffSeq:
    def test_origin_indexing(self):
        s = CoeffSeq(GF2, [1, 0, 1], origin=1)
        assert s[1] == 1 and s[2] == 0 and s[3] == 1
        with pytest.raises(IndexError):
            s[0]
        with pytest.raises(IndexError):
            s[4]

    def test_shift_relabels(self):
        s = CoeffSeq(GF2, [1, 0, 1], origin=1)
        c = s.shift_index(0)
        assert c.origin == 0
        assert c.terms == s.terms
        assert c[0] == s[1]

    def test_validates_residues(self):
        with pytest.raises(ValueError):
            CoeffSeq(GF2, [0, 2], origin=0)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=40).filter(lambda v: v[0] == 1))
def test_series_inverse_property(bits):
    s = TruncSeries(GF2, bits, len(bits))
    inv = series_inverse(s)
    prod = s * inv
    assert prod.coeffs == (1,) + (0,) * (prod.precision - 1)


@given(st.sampled_from([3, 5, 7]).map(PrimeField), st.data())
def test_series_inverse_generic(f, data):
    n = data.draw(st.integers(1, 24))
    coeffs = [data.draw(st.integers(1, f.p - 1))] + [
        data.draw(st.integers(0, f.p - 1)) for _ in range(n - 1)
    ]
    s = TruncSeries(f, coeffs, n)
    prod = s * series_inverse(s)
    assert prod.coeffs == (1,) + (0,) * (n - 1)


def test_series_inverse_needs_unit():
    with pytest.raises(ValueError):
        series_inverse(TruncSeries(GF2, [0, 1], 2))


def test_square_doubles_precision_in_char_two():
    s = TruncSeries(GF2, [1, 1, 0, 1], 4)
    sq = s.square()
    assert sq.precision == 8
    # (sum a_i x^i)^2 = sum a_i x^(2i) over F2
    assert sq.coeffs == (1, 0, 1, 0, 0, 0, 1, 0)


def test_shift_raises_precision():
    s = TruncSeries(GF2, [1, 1], 2)
    sh = s.shift(3)
    assert sh.precision == 5
    assert sh.coeffs == (0, 0, 0, 1, 1)


def test_series_derivative():
    f = PrimeField(5)
    s = TruncSeries(f, [4, 3, 2, 1], 4)
    d = series_derivative(s)
    assert d.precision == 3
    assert d.coeffs == (3, 4, 3)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=64), st.sampled_from([0, 1]))
def test_sequence_file_round_trip(bits, origin):
    seq = CoeffSeq(GF2, bits, origin=origin)
    text = dumps_sequence(seq)
    back = loads_sequence(text)
    assert back.terms == seq.terms
    assert back.origin == seq.origin
    assert back.field.p == 2


def test_sequence_file_round_trip_generic_p():
    f = PrimeField(7)
    seq = CoeffSeq(f, list(range(7)) * 11, origin=1)
    back = loads_sequence(dumps_sequence(seq))
    assert back.terms == seq.terms and back.field.p == 7


def test_parse_errors_carry_position():
    with pytest.raises(SequenceFormatError) as e:
        loads_sequence("# field=2 origin=0 length=3\n1 0 2\n")
    assert e.value.line == 2
    assert "2" in str(e.value)
    with pytest.raises(SequenceFormatError) as e:
        loads_sequence("no header\n")
    assert e.value.line == 1


def test_parse_length_mismatch():
    with pytest.raises(SequenceFormatError):
        loads_sequence("# field=2 origin=0 length=4\nbits=101\n")


def test_bits_form_rejected_for_odd_fields():
    with pytest.raises(SequenceFormatError):
        loads_sequence("# field=3 origin=0 length=2\nbits=10\n")
