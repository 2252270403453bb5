"""Conductance routes: state sum, recursion, continued fraction, closed forms."""

from fractions import Fraction

import pytest

from vtangle.bracket import bracket
from vtangle.conductance import (
    PATH_CLASSICAL,
    PATH_CLOSED,
    PATH_FRACTION,
    PATH_RECURSION,
    PATH_STATE_SUM,
    additivity_identity,
    classical_fraction,
    closed_form,
    conductance_from_bracket,
    conductance_paths,
    conductance_recursive,
    continued_fraction_C,
    ratio_identity,
)
from vtangle.diagram import build_basic
from vtangle.errors import (
    DivisorZeroError,
    IndeterminateError,
    TangleError,
    UnsupportedPatternError,
)
from vtangle.gaussian import G_I, INFINITY, GaussRational
from vtangle.vector import INF, TangleVector, parse_vector


def _state_sum(s: str) -> GaussRational:
    return conductance_from_bracket(bracket(build_basic(parse_vector(s))))


GOLDEN = {
    "0": GaussRational(0, 0),
    "0v": G_I,
    "2,3,1v": GaussRational(Fraction(9, 7), 1),
    "1v,1v": GaussRational(1, 1),
    "1v,1": GaussRational(Fraction(3, 5), Fraction(1, 5)),
    "1,1v,0v": GaussRational(Fraction(-2, 5), Fraction(4, 5)),
    "inf,2": GaussRational(Fraction(1, 2), 0),
    "inf,2v": GaussRational(Fraction(2, 5), Fraction(1, 5)),
    "inf,3,1v": GaussRational(Fraction(4, 3), 1),
    "inf,2v,1v": GaussRational(Fraction(3, 5), Fraction(4, 5)),
}


def test_golden_state_sums():
    for text, want in GOLDEN.items():
        assert _state_sum(text) == want, text
    assert _state_sum("inf") == INFINITY


def test_all_routes_agree_on_goldens():
    for text, want in GOLDEN.items():
        vec = parse_vector(text)
        values, errors = conductance_paths(vec)
        assert not errors, (text, errors)
        for label, cv in values.items():
            assert cv.value == want, (text, label)
            assert cv.provenance == label


def test_elementary_conductance_table():
    for n in range(-5, 6):
        if n == 0:
            continue
        n_f = Fraction(n)
        assert _state_sum(str(n)) == GaussRational(n_f, 0)
        assert _state_sum(f"{n}v") == GaussRational(n_f, 1)
        # vertical twists enter as inf-prefixed vectors
        assert _state_sum(f"inf,{n}") == GaussRational(1 / n_f, 0)
        # 1/(n - i) = n/(n^2+1) + i/(n^2+1)
        d = n_f * n_f + 1
        assert _state_sum(f"inf,{n}v") == GaussRational(n_f / d, 1 / d)


def test_classical_fraction():
    assert classical_fraction([2, 3, 1]) == GaussRational(Fraction(9, 7), 0)
    assert classical_fraction([0]) == GaussRational(0, 0)
    assert classical_fraction([INF]) == INFINITY
    assert classical_fraction([INF, 2]) == GaussRational(Fraction(1, 2), 0)
    # even length folds one extra reciprocal: (2,3) ~ (2,3,0)
    assert classical_fraction([2, 3]) == GaussRational(Fraction(2, 7), 0)
    # vertical-first input gains the inf prefix
    assert classical_fraction([2], first_is_horizontal=False) == GaussRational(
        Fraction(1, 2), 0
    )
    assert classical_fraction([1, 1, -1]) == GaussRational(Fraction(-1, 2), 0)
    # a projective infinity midway recovers at the next level
    assert classical_fraction([0, 3, 2]) == GaussRational(2, 0)


def test_recursion_matches_fraction_on_classical():
    for entries in ([2, 3, 1], [1, 1, -1], [3, -2], [0], [INF, 2], [INF, -3, 2]):
        vec = TangleVector(tuple((a, 0) for a in entries))
        vec.validate()
        assert conductance_recursive(vec) == classical_fraction(entries), entries


def test_degenerate_family_raises_and_recovers():
    # first entry 0 without marker, marked third entry: the twist divisor
    # needs C/D of the (0, b) prefix, which is 0/0
    for text in ("0,1,2v", "0,2v,1v", "0,-3,0v"):
        vec = parse_vector(text)
        with pytest.raises(DivisorZeroError) as exc:
            conductance_recursive(vec)
        assert exc.value.level == 3
        with pytest.raises(IndeterminateError):
            continued_fraction_C(vec)
        # state sum and closed form still agree on c + i
        c = vec.entries[2][0]
        want = GaussRational(c, 1)
        assert _state_sum(text) == want
        assert closed_form(vec) == want


def test_closed_form_dispatch():
    assert closed_form(parse_vector("3")) == GaussRational(3, 0)
    assert closed_form(parse_vector("3v")) == GaussRational(3, 1)
    assert closed_form(parse_vector("inf")) == INFINITY
    assert closed_form(parse_vector("1v,1")) == GaussRational(
        Fraction(3, 5), Fraction(1, 5)
    )
    assert closed_form(parse_vector("1,1v,0v")) == GaussRational(
        Fraction(-2, 5), Fraction(4, 5)
    )
    with pytest.raises(UnsupportedPatternError):
        closed_form(parse_vector("1,1,1,1v"))


def test_closed_form_projective_infinity():
    # a*b = -1 makes the two-entry denominator vanish with nonzero numerator
    assert closed_form(parse_vector("1,-1")) == INFINITY
    # fully marked (0v, 0v) pattern is a genuine 0/0 for the formula alone
    with pytest.raises(IndeterminateError):
        closed_form(parse_vector("0v,0v"))
    assert _state_sum("0v,0v") == INFINITY


def test_continued_fraction_inf_first_limit():
    # the marked second entry after inf uses the exact limit w = a - i
    assert continued_fraction_C(parse_vector("inf,2v")) == GaussRational(
        Fraction(2, 5), Fraction(1, 5)
    )
    assert continued_fraction_C(parse_vector("inf,2v,1v")) == GaussRational(
        Fraction(3, 5), Fraction(4, 5)
    )


def test_conductance_paths_reports_routes():
    values, errors = conductance_paths(parse_vector("2,3,1"))
    assert set(values) == {
        PATH_STATE_SUM,
        PATH_RECURSION,
        PATH_FRACTION,
        PATH_CLOSED,
        PATH_CLASSICAL,
    }
    assert not errors
    values, errors = conductance_paths(parse_vector("1,1,1,1v"))
    assert PATH_CLOSED not in values  # no closed form beyond length 3
    assert PATH_CLASSICAL not in values  # not classical
    assert not errors


def test_additivity_identity_golden():
    t = bracket(build_basic(parse_vector("2,1v")))
    s = bracket(build_basic(parse_vector("1v")))
    lhs, rhs, corr = additivity_identity(t, s, "plus")
    assert lhs == rhs - corr
    assert corr != GaussRational(0, 0)
    # a classical side forces the correction to vanish
    s0 = bracket(build_basic(parse_vector("3")))
    lhs, rhs, corr = additivity_identity(t, s0, "plus")
    assert corr == GaussRational(0, 0)
    assert lhs == rhs


def test_additivity_star_variant():
    t = bracket(build_basic(parse_vector("1v,2")))
    s = bracket(build_basic(parse_vector("2v")))
    lhs, rhs, corr = additivity_identity(t, s, "star")
    assert lhs.invert() == rhs.invert() + corr
    with pytest.raises(ValueError):
        additivity_identity(t, s, "times")


def test_ratio_identity():
    for text in ("2,1v", "1v,1v", "3,-2"):
        d = build_basic(parse_vector(text))
        c, c_east, c_south = ratio_identity(d)
        assert c == -(G_I * c_east * c_south), text
    # the single virtual crossing is projective: one factor 0, one infinite
    c, c_east, c_south = ratio_identity(build_basic(parse_vector("0v")))
    assert (c, c_east, c_south) == (G_I, GaussRational(0, 0), INFINITY)
    with pytest.raises(IndeterminateError):
        -(G_I * c_east * c_south)


def test_figure_family_regression():
    for a in (1, 2, 3):
        for c in range(-2, 3):
            marked = parse_vector(f"{a}v,0v,{c}v")
            classical = parse_vector(f"inf,{-a},{c}")
            want = GaussRational(c - Fraction(1, a), 0)
            assert conductance_recursive(marked) == want
            assert conductance_recursive(classical) == want
            assert _state_sum(f"{a}v,0v,{c}v") == want


def test_error_types_are_tangle_errors():
    assert issubclass(DivisorZeroError, IndeterminateError)
    assert issubclass(IndeterminateError, TangleError)
    assert issubclass(UnsupportedPatternError, TangleError)
