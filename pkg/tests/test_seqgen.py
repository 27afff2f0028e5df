import pytest
from hypothesis import given, strategies as st

from plcpkit.field import GF2, CoeffSeq
from plcpkit.seqgen import (
    NAMED_SEQUENCES,
    BitSource,
    UniformMorphism,
    _splitmix64_words,
    derive_seed,
    morphism_fixed_point,
    named_sequence,
    phi1_jacobi,
    phi2_selector,
    phi3_generalized_rueppel,
    rueppel,
)


def test_splitmix64_reference_vector():
    # first outputs for seed 0 from the reference implementation
    assert _splitmix64_words(0, 3) == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_derive_seed_is_stable_and_spread():
    seeds = [derive_seed(0, i) for i in range(100)]
    assert len(set(seeds)) == 100
    assert derive_seed(0, 0) == seeds[0]  # deterministic
    assert derive_seed(1, 0) != seeds[0]


class TestBitSource:
    def test_literal(self):
        b = BitSource.literal("1011")
        assert b.take(4) == [1, 0, 1, 1]
        with pytest.raises(ValueError):
            b.bit(4)

    def test_periodic(self):
        b = BitSource.periodic("1", "001")
        assert b.take(8) == [1, 0, 0, 1, 0, 0, 1, 0]
        pure = BitSource.periodic("", "01")
        assert pure.take(5) == [0, 1, 0, 1, 0]

    def test_random_bits_come_lsb_first(self):
        b = BitSource.seeded(0)
        word = 0xE220A8397B1DCDAF
        assert b.take(64) == [(word >> i) & 1 for i in range(64)]

    def test_take_matches_bit(self):
        b = BitSource.seeded(99)
        assert b.take(130) == [b.bit(i) for i in range(130)]

    @pytest.mark.parametrize(
        "spec",
        ["literal:1011", "periodic::1", "periodic:1:001", "random:42"],
    )
    def test_parse_spec_round_trip(self, spec):
        assert BitSource.parse(spec).spec() == spec

    @pytest.mark.parametrize(
        "bad",
        ["literal:", "literal:102", "periodic:1", "periodic:1:", "random:x", "what:1"],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            BitSource.parse(bad)


def test_rueppel_supports():
    r1 = rueppel("first", 40)
    assert r1.origin == 1
    assert [n for n in range(1, 41) if r1[n]] == [1, 2, 4, 8, 16, 32]
    r2 = rueppel("second", 40)
    assert [n for n in range(1, 41) if r2[n]] == [1, 3, 7, 15, 31]
    with pytest.raises(ValueError):
        rueppel("third", 8)


def test_phi3_interpolates_between_rueppel_pair():
    n = 200
    all0 = phi3_generalized_rueppel(BitSource.periodic("", "0"), n)
    all1 = phi3_generalized_rueppel(BitSource.periodic("", "1"), n)
    assert all0.terms == rueppel("first", n).terms
    assert all1.terms == rueppel("second", n).terms


def test_phi3_marks_follow_doubling_law():
    b = BitSource.parse("literal:110100")
    s = phi3_generalized_rueppel(b, 120)
    marks = [n for n in range(1, 121) if s[n]]
    assert marks[0] == 1
    stream = [1, 1, 0, 1, 0, 0]
    for h in range(len(marks) - 1):
        assert marks[h + 1] == 2 * marks[h] + stream[h]


def test_phi2_selector_consumes_prefix_only():
    # term n depends on b_0..b_((n-2)//2), so two streams sharing a prefix
    # must agree on the corresponding prefix of outputs
    b1 = BitSource.literal("10110000")
    b2 = BitSource.literal("10111111")
    s1 = phi2_selector(b1, 9)
    s2 = phi2_selector(b2, 9)
    assert s1.terms[:9] == s2.terms[:9]


def test_phi1_expansion_has_prescribed_quotients():
    # the defining property: partial quotient j of the expansion is t + b_j
    from plcpkit.cfrac import laurent_cf
    from plcpkit.field import DensePoly

    for spec in ("random:3", "periodic::10", "literal:" + "011010011001011010" * 2):
        b = BitSource.parse(spec)
        s = phi1_jacobi(b, 64).shift_index(1)
        cf = laurent_cf(s)
        assert cf.guaranteed_count >= 30
        for j in range(cf.guaranteed_count):
            assert cf.quotients[j] == DensePoly(GF2, (b.bit(j), 1)), (spec, j)


def test_named_registry():
    assert set(NAMED_SEQUENCES) == {"pd", "thue-morse", "z", "w"}
    with pytest.raises(ValueError):
        named_sequence("nope", 4)


def test_named_long_spellings_are_aliases():
    for long, short in (("period-doubling", "pd"), ("z-seq", "z"), ("w-seq", "w")):
        a, b = named_sequence(long, 64), named_sequence(short, 64)
        assert a.terms == b.terms and a.origin == b.origin


def test_thue_morse_is_parity_of_bitcount():
    tm = named_sequence("thue-morse", 64)
    assert tm.origin == 0
    assert tm.terms == tuple(bin(n).count("1") % 2 for n in range(64))


def test_pd_is_morphism_fixed_point():
    m = UniformMorphism(image1=(1, 0), image0=(1, 1))
    assert morphism_fixed_point(m, 128).terms == named_sequence("pd", 128).terms


def test_complement_thue_morse_is_fixed_point():
    # 1 -> 10, 0 -> 01 fixes the complement of thue-morse
    m = UniformMorphism(image1=(1, 0), image0=(0, 1))
    fp = morphism_fixed_point(m, 128)
    tm = named_sequence("thue-morse", 128)
    assert fp.terms == tuple(1 - t for t in tm.terms)


def test_z_is_pd_without_the_index_shift():
    z = named_sequence("z", 100)
    pd = named_sequence("pd", 100)
    assert z.origin == 1 and pd.origin == 0
    assert z.terms == pd.terms


def test_z_and_w_defining_relations():
    z = named_sequence("z", 1001)
    w = named_sequence("w", 1001)
    for n in range(1, 500):
        assert z[2 * n] == 1 ^ z[n]
        assert z[2 * n + 1] == 1
        assert w[2 * n + 1] == 1 ^ w[n]
        assert w[2 * n] == 1
        # both satisfy x_n + x_2n + x_2n+1 = 0
        assert (z[n] + z[2 * n] + z[2 * n + 1]) % 2 == 0
        assert (w[n] + w[2 * n] + w[2 * n + 1]) % 2 == 0


class TestUniformMorphism:
    def test_str(self):
        m = UniformMorphism(image1=(1, 0), image0=(1, 1))
        assert str(m) == "1->10, 0->11"

    def test_validation(self):
        with pytest.raises(ValueError):
            UniformMorphism(image1=(1,), image0=(1, 1))  # unequal lengths
        with pytest.raises(ValueError):
            UniformMorphism(image1=(1, 2), image0=(1, 1))
        with pytest.raises(ValueError):
            UniformMorphism(image1=(1,), image0=(0,))  # k must be >= 2

    def test_fixed_point_needs_prolongable_image(self):
        m = UniformMorphism(image1=(0, 1), image0=(1, 1))
        with pytest.raises(ValueError):
            morphism_fixed_point(m, 16)


@given(st.integers(2, 4), st.data())
def test_fixed_point_is_fixed(k, data):
    image1 = tuple([1] + [data.draw(st.integers(0, 1)) for _ in range(k - 1)])
    image0 = tuple(data.draw(st.integers(0, 1)) for _ in range(k))
    m = UniformMorphism(image1=image1, image0=image0)
    n = 96
    fp = morphism_fixed_point(m, n)
    # applying the morphism to the fixed point reproduces it
    expanded = []
    for t in fp.terms:
        expanded.extend(image1 if t else image0)
    assert tuple(expanded[:n]) == fp.terms


@given(st.lists(st.integers(0, 1), min_size=1, max_size=32), st.integers(1, 64))
def test_generators_are_pure(bits, n):
    b1 = BitSource.literal(bits * 8)
    b2 = BitSource.literal(bits * 8)
    a = phi3_generalized_rueppel(b1, n)
    b = phi3_generalized_rueppel(b2, n)
    assert a.terms == b.terms
    assert isinstance(a, CoeffSeq) and a.field is GF2
