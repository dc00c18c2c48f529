from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import padd, plist, pmul, rank_by_minors, rank_by_span
from torusfloer.algebra import (BASIS, CHORDS, LEFT, ONE, RIGHT, T, ZERO, AlgebraElement,
                                LaurentPoly, RationalFn, alg_mul, basis_mul, clmul,
                                labels_between, matrix_rank, poly_divmod, poly_gcd,
                                rank_f2, specialize_at_one)

# products of basis elements that must be nonzero, written out by hand
EXPECTED_NONZERO = {
    ("i0", "i0"): "i0", ("i1", "i1"): "i1",
    ("r1", "r2"): "r12", ("r2", "r3"): "r23", ("r1", "r23"): "r123", ("r12", "r3"): "r123",
}
for _c in CHORDS:
    EXPECTED_NONZERO[(LEFT[_c], _c)] = _c
    EXPECTED_NONZERO[(_c, RIGHT[_c])] = _c


def test_full_multiplication_table():
    for a, b in product(BASIS, BASIS):
        assert basis_mul(a, b) == EXPECTED_NONZERO.get((a, b)), (a, b)


def test_named_products():
    assert not alg_mul("i0", "i1")
    assert alg_mul("r1", "r2") == "r12"
    assert not alg_mul("r2", "r1")
    assert not alg_mul("r12", "r12")


def test_associativity_exhaustive():
    for a, b, c in product(BASIS, repeat=3):
        assert alg_mul(alg_mul(a, b), c) == alg_mul(a, alg_mul(b, c)), (a, b, c)


elements = st.sets(st.sampled_from(BASIS)).map(AlgebraElement)


@given(elements, elements, elements)
def test_distributive_and_associative_on_sums(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


def test_unit_is_sum_of_idempotents():
    one = AlgebraElement(["i0", "i1"])
    for x in BASIS:
        assert one * AlgebraElement([x]) == x
        assert AlgebraElement([x]) * one == x


def test_labels_between_respect_idempotents():
    for s, d in product(("i0", "i1"), repeat=2):
        for lab in labels_between(s, d):
            assert alg_mul(alg_mul(s, lab), d) == lab
    assert labels_between("i0", "i0") == ("r12",)
    assert set(labels_between("i0", "i1")) == {"r1", "r3", "r123"}


def test_bad_symbol():
    with pytest.raises(ValueError):
        AlgebraElement(["r4"])


# --- Laurent polynomials -------------------------------------------------------

laurent = st.builds(LaurentPoly.from_exponents, st.lists(st.integers(-6, 6), max_size=6))
poly_ints = st.integers(0, 2 ** 12)


@given(poly_ints, poly_ints)
def test_clmul_matches_naive(a, b):
    def as_list(x):
        return [(x >> i) & 1 for i in range(x.bit_length())]
    assert as_list(clmul(a, b)) == pmul(as_list(a), as_list(b))


@given(poly_ints, st.integers(1, 2 ** 8))
def test_divmod(a, b):
    q, r = poly_divmod(a, b)
    assert clmul(q, b) ^ r == a
    assert r.bit_length() < b.bit_length()


@given(poly_ints, poly_ints)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if a or b:
        assert poly_divmod(a, g)[1] == 0 and poly_divmod(b, g)[1] == 0


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == ZERO
    assert a * ONE == a


@given(laurent, laurent)
def test_laurent_multiplication_against_lists(a, b):
    s = 12
    assert plist(a * b, 2 * s) == pmul(plist(a, s), plist(b, s))
    assert plist(a + b, s) == padd(plist(a, s), plist(b, s))


@given(laurent)
def test_laurent_text_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


@given(laurent)
def test_evaluation_at_one_is_a_ring_map(a):
    assert (a * T).at_one() == a.at_one()
    assert (a + ONE).at_one() == (a.at_one() + 1) % 2


def test_parse_examples():
    assert LaurentPoly.parse("t^2") == T ** 2
    assert LaurentPoly.parse("t^-1") * T == ONE
    assert LaurentPoly.parse("1+t^3") == ONE + T ** 3
    assert LaurentPoly.parse("0") == ZERO
    for bad in ("", "x", "t^a", "2t"):
        with pytest.raises(ValueError):
            LaurentPoly.parse(bad)


def test_only_monomials_invert():
    assert (T ** -3) * (T ** 3) == ONE
    with pytest.raises(ZeroDivisionError):
        (ONE + T) ** -1


# --- rational functions ------------------------------------------------------

nonzero = laurent.filter(bool)
rational = st.builds(RationalFn, laurent, nonzero)


@given(rational, rational, rational)
@settings(max_examples=60)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == RationalFn(ZERO)


@given(rational)
def test_inverse(a):
    if a:
        assert a * a.inverse() == RationalFn(ONE)
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


def test_rational_examples():
    x = RationalFn(ONE, ONE + T)
    assert x * (ONE + T) == RationalFn(ONE)
    assert RationalFn(ONE + T ** 2, ONE + T) == RationalFn(ONE + T)
    with pytest.raises(ZeroDivisionError):
        RationalFn(ONE, ZERO)


# --- ranks ----------------------------------------------------------------------

def test_rank_examples():
    assert matrix_rank([[0] * 3] * 3) == 0
    M = [[ONE, T, ZERO], [ZERO, ONE, T], [T, ZERO, ONE]]
    assert matrix_rank(M) == 3
    assert matrix_rank(M, field="RationalFn") == 3
    assert matrix_rank(specialize_at_one(M), field="F2") == 2


def test_rank_field_guard():
    with pytest.raises(TypeError):
        matrix_rank([[T]], field="F2")
    with pytest.raises(ValueError):
        matrix_rank([[1]], field="Q")


f2_matrix = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=1, max_size=7))


@given(f2_matrix)
def test_f2_rank_matches_span_enumeration(M):
    assert rank_f2(M) == rank_by_span(M)
    assert matrix_rank(M) == rank_by_span(M)


small_laurent = st.builds(LaurentPoly.from_exponents, st.lists(st.integers(-2, 3), max_size=3))
f2t_matrix = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small_laurent, min_size=n, max_size=n), min_size=1, max_size=4))


@given(f2t_matrix)
@settings(max_examples=150)
def test_f2t_rank_matches_minors(M):
    assert matrix_rank(M, field="RationalFn") == rank_by_minors(M)


@given(f2t_matrix)
@settings(max_examples=80)
def test_specialization_cannot_raise_rank(M):
    assert matrix_rank(specialize_at_one(M), field="F2") <= matrix_rank(M, field="RationalFn")


def test_rank_with_rational_entries():
    half = RationalFn(ONE, ONE + T)
    M = [[half, ONE], [ONE, ONE + T]]
    # second row is (1 + t) times the first
    assert matrix_rank(M) == 1
