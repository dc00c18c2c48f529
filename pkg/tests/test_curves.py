import math
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from torusfloer.curves import (LONGITUDE, MERIDIAN, CurveComponent, MultiCurve, Slope,
                               UnsupportedCurveError, commensurable, curve_to_typeD,
                               cyclic_reduce, distance, free_reduce, invert,
                               is_longitude_power, line_class, line_intersection_dim,
                               line_typeD, primitive_root, segment_arrow, staircase_word,
                               supported_near_longitude, word_to_typeD)
from torusfloer.pairing import box_tensor, homology_dim, mor_pairing
from torusfloer.structures import builtin, check_typeD, is_bounded, isomorphic

words = st.text(alphabet="lLmM", min_size=1, max_size=10)
reduced_words = words.map(cyclic_reduce).filter(bool)
slopes = st.tuples(st.integers(-7, 7), st.integers(0, 7)).filter(
    lambda pq: pq != (0, 0)).map(lambda pq: Slope(*pq))


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


# --- words ----------------------------------------------------------------------

def test_reduction():
    assert free_reduce("lLmlL") == "m"
    assert cyclic_reduce("Mlm") == "l"
    assert cyclic_reduce("lmML") == ""
    with pytest.raises(ValueError):
        free_reduce("lx")


@given(words)
def test_reduced_words_are_fixed_points(w):
    r = cyclic_reduce(w)
    assert cyclic_reduce(r) == r
    assert cyclic_reduce(invert(r)) == invert(r)


def test_primitive_root():
    assert primitive_root("lmlmlm") == ("lm", 3)
    assert primitive_root("lmm") == ("lmm", 1)


def test_component_validation():
    with pytest.raises(ValueError):
        CurveComponent("")
    with pytest.raises(ValueError):
        CurveComponent("lmML")
    with pytest.raises(ValueError):
        CurveComponent.from_word("lL")
    assert CurveComponent.from_word("mlM").word == "l"
    with pytest.raises(ValueError):
        MultiCurve.from_words(["l @z", "m @z"])
    C = MultiCurve.from_words(["lll", "l @z"])
    assert [c.through_basepoint for c in C.components] == [False, True]


# --- classification of components -------------------------------------------------

def test_longitude_power_examples():
    assert is_longitude_power("lll") == 3
    assert is_longitude_power("LL") == -2
    assert is_longitude_power("lmlM") is None
    assert is_longitude_power("m") is None


@given(reduced_words)
def test_longitude_power_invariant_under_rotation_and_inversion(w):
    j = is_longitude_power(w)
    for r in rotations(w):
        assert is_longitude_power(r) == j
    inv = is_longitude_power(invert(w))
    assert inv == (None if j is None else -j)


def test_supported_near_longitude():
    assert supported_near_longitude(MultiCurve.from_words(["l", "LL", "lll"]))
    assert not supported_near_longitude(MultiCurve.from_words(["l", "lm"]))
    assert supported_near_longitude(MultiCurve(()))


def test_commensurable():
    assert commensurable("ll", "lll")
    assert not commensurable("l", "m")
    assert not commensurable("lmlM", "l")
    assert commensurable("lmlm", "ML")


@given(reduced_words, st.integers(1, 3), st.integers(1, 3))
def test_commensurable_with_own_powers(w, a, b):
    assume(len(w) * max(a, b) <= 24)
    assert commensurable(w * a, invert(w) * b)


# --- slopes and lines ----------------------------------------------------------------

def test_slope_normalization():
    assert Slope(2, 4) == Slope(1, 2)
    assert Slope(1, -2) == Slope(-1, 2)
    assert Slope(-3, 0) == MERIDIAN
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_line_intersection_examples():
    for p, q in [(1, 1), (-3, 2), (5, 7)]:
        assert line_intersection_dim(LONGITUDE, Slope(p, q)) == abs(p)
    assert line_intersection_dim(LONGITUDE, LONGITUDE) == 2
    assert line_intersection_dim(LONGITUDE, LONGITUDE, parallel_value=0) == 0
    assert distance(MERIDIAN, LONGITUDE) == 1


@given(slopes)
def test_staircase_words(s):
    w = staircase_word(s)
    comp = CurveComponent(w)
    assert comp.homology_class() == (s.q, s.p)
    # a straight line moves monotonically
    assert not ({"l", "L"} <= set(w) or {"m", "M"} <= set(w))
    assert line_class(w) == (s, 1)
    for r in rotations(w):
        assert line_class(r) == (s, 1)
    assert line_class(invert(w)) == (s, 1)


@given(slopes, st.integers(2, 3))
def test_multiples_of_lines(s, j):
    assert line_class(staircase_word(s) * j) == (s, j)


def test_non_lines():
    assert line_class("lmlM") is None
    # class (2, 2) but not the doubled staircase lmlm
    assert line_class("llmm") is None
    assert line_class("lmlm") == (Slope(1, 1), 2)
    # class (2, 3) but not a staircase
    assert line_class("llmmm") is None
    assert line_class("lmmlm") == (Slope(3, 2), 1)


# --- the dictionary ------------------------------------------------------------------

def test_segment_arrows_have_compatible_idempotents():
    for a, b in product("lLmM", repeat=2):
        if a == {"l": "L", "L": "l", "m": "M", "M": "m"}[b]:
            continue
        forward, chord = segment_arrow(a, b)
        assert chord in ("r1", "r2", "r3", "r12", "r23", "r123")


def test_line_cubed_gives_the_three_cycle():
    P = curve_to_typeD(MultiCurve.from_words(["lll"]))
    assert isomorphic(P, builtin("fig3_typeD")) is not None


def test_single_longitude():
    P = curve_to_typeD("l")
    assert P.generators == (("c0x0", "i0"),)
    assert P.arrows == (("c0x0", "r12", "c0x0"),)
    assert check_typeD(P) == []
    assert homology_dim(box_tensor(builtin("S_twisted_bounded"), P)) == 0


def test_hand_entered_example_matches_generic_reader():
    P = word_to_typeD("mLMll")
    assert check_typeD(P) == []
    assert isomorphic(P, builtin("fig2_typeD")) is not None
    assert is_bounded(P).bounded


@given(reduced_words)
@settings(max_examples=300)
def test_every_reduced_word_gives_a_valid_structure(w):
    P = word_to_typeD(w)
    assert check_typeD(P) == []
    assert len(P) == len(w)
    # horizontal-edge crossings are exactly the i1 generators
    assert sum(i == "i1" for _, i in P.generators) == sum(ch in "mM" for ch in w)
    # rotating the word only renames generators
    assert isomorphic(P, word_to_typeD(w[1:] + w[:1])) is not None


def test_curves_without_vertical_letters_are_i0_only():
    for ws in (["l"], ["ll", "LLL"], ["l @z"]):
        P = curve_to_typeD(MultiCurve.from_words(ws))
        assert all(i == "i0" for _, i in P.generators)


def test_unsupported_classes_are_refused():
    with pytest.raises(UnsupportedCurveError, match="dictionary not implemented"):
        curve_to_typeD(MultiCurve.from_words(["lmlM"]))


@given(slopes)
def test_line_structures(s):
    P = line_typeD(s)
    assert check_typeD(P) == []
    assert len(P) == abs(s.p) + s.q
    S = builtin("S_untwisted_bounded")
    assert homology_dim(box_tensor(S, P)) == line_intersection_dim(LONGITUDE, s)


@given(slopes, slopes)
@settings(max_examples=150, deadline=None)
def test_line_pairing_counts_intersections(s1, s2):
    dim = homology_dim(mor_pairing(line_typeD(s1), line_typeD(s2)))
    assert dim == line_intersection_dim(s1, s2)
    assert dim == abs(s1.p * s2.q - s2.p * s1.q) or (dim == 2 and distance(s1, s2) == 0)


def test_gcd_sanity():
    for p, q in product(range(-7, 8), range(0, 8)):
        if (p, q) != (0, 0):
            s = Slope(p, q)
            assert math.gcd(s.p, s.q) == 1
