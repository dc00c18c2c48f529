import pytest

import torusfloer.hfst as hfst
from torusfloer.curves import (LONGITUDE, MultiCurve, Slope, line_class, line_intersection_dim,
                               staircase_word)
from torusfloer.hfst import (ConsistencyError, filling_dims, filling_slope, is_hfst,
                             surgery_triples, triangle_rank_check, twisted_lambda_dim)
from torusfloer.structures import builtin


def curve(*words):
    return MultiCurve.from_words(words)


def dims(pairs):
    return [d for _, d in pairs]


def test_filling_slope_is_mu_plus_k_lambda():
    assert filling_slope(0) == Slope(1, 0)
    assert filling_slope(3) == Slope(1, 3)
    assert filling_slope(-2) == Slope(-1, 2)


def test_longitude_cubed_is_hfst():
    v = is_hfst(curve("lll"))
    assert v.is_hfst and v.twisted_dim == 0 and v.untwisted_dim == 2
    assert v.condition2_constant and v.condition3_supported
    assert set(dims(v.condition2_dims)) == {3}


def test_hand_entered_admissible_example_is_hfst():
    v = is_hfst(builtin("fig2_typeD"))
    assert v.is_hfst and v.untwisted_dim == 0 and v.twisted_dim == 0
    assert v.condition3_supported is None
    assert set(dims(v.condition2_dims)) == {1}


def test_slope_one_line_is_not_hfst():
    v = is_hfst(curve("lm"))
    assert not v.is_hfst and not v.condition2_constant and not v.condition3_supported
    # |1 - k| away from k = 1, and the parallel value 2 at k = 1
    assert v.condition2_dims == tuple((k, abs(1 - k) or 2) for k in range(-4, 5))


def test_solid_torus_fillings_are_spheres():
    assert set(dims(filling_dims(curve("l @z"), 5))) == {1}


def test_vertical_powers():
    for j in (1, 2, 3):
        got = filling_dims(curve("m" * j), 4)
        assert got == [(k, j * abs(k) if k else 2) for k in range(-4, 5)]
        assert not is_hfst(curve("m" * j)).is_hfst


def test_line_components_against_determinants():
    for p, q in [(1, 1), (-2, 3), (3, 2), (0, 1), (1, 0)]:
        C = curve(staircase_word(Slope(p, q)))
        for k, d in filling_dims(C, 3):
            assert d == line_intersection_dim(Slope(p, q), Slope(1, k))


def test_window_default_and_override():
    v = is_hfst(curve("ll"))
    assert v.window == 4 and len(v.condition2_dims) == 9
    assert is_hfst(curve("ll"), window=1).window == 1
    with pytest.raises(ValueError):
        filling_dims(curve("l"), 0)


def test_verdict_text_is_key_value():
    text = is_hfst(curve("l @z"), window=2).as_text()
    fields = dict(line.split(": ", 1) for line in text.splitlines())
    assert fields["is_hfst"] == "true"
    assert fields["twisted_vanishing"] == "true"
    assert fields["filling[-2]"] == "1"


def test_disagreeing_channels_raise(monkeypatch):
    monkeypatch.setattr(hfst, "twisted_lambda_dim", lambda obj: 2)
    with pytest.raises(ConsistencyError):
        is_hfst(curve("lll"))


def test_twisted_lambda_dim_of_lines():
    for p, q in [(1, 1), (2, 3), (-1, 4), (1, 0)]:
        assert twisted_lambda_dim(curve(staircase_word(Slope(p, q)))) == abs(p)
    assert twisted_lambda_dim(curve("l")) == 0


def test_triangle_examples():
    assert triangle_rank_check(1, 1, 0) == []
    assert len(triangle_rank_check(1, 2, 0)) == 2
    assert triangle_rank_check(0, 0, 0) == []
    assert triangle_rank_check(-1, 1, 0)


def test_lens_space_triples():
    # the solid torus whose meridian is vertical: fillings are lens spaces
    triples = surgery_triples(curve("m"), range(-5, 6))
    for k, (a, b, c) in zip(range(-5, 6), triples):
        assert c == 1
        assert {a, b} == {abs(k) or 2, abs(k + 1) or 2}
        assert triangle_rank_check(a, b, c) == []


def test_longitude_projection_matches_twisted():
    for ws in (["l"], ["ll", "L"], ["lm"], ["m", "mm"]):
        C = curve(*ws)
        expected = 0
        for c in C.components:
            slope, j = line_class(c)
            expected += j * line_intersection_dim(LONGITUDE, slope, 0)
        assert twisted_lambda_dim(C) == expected


@pytest.mark.parametrize("words", [["l"], ["lll"], ["LL", "l"], ["l @z"]])
def test_vanishing_curves_stay_constant_far_out(words):
    C = curve(*words)
    v = is_hfst(C)
    assert v.twisted_vanishing
    far = dims(filling_dims(C, ks=[-5 * v.window, 5 * v.window]))
    assert set(far) == set(dims(v.condition2_dims))
