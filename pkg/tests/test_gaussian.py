"""Projective Q(i): exact arithmetic, the point at infinity, canonical text."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vtangle.errors import IndeterminateError
from vtangle.gaussian import G_I, G_ONE, G_ZERO, INFINITY, GaussRational


def test_golden_division():
    # 1/(2 - i) = 2/5 + 1/5 i
    assert GaussRational(2, -1).invert() == GaussRational(Fraction(2, 5), Fraction(1, 5))
    # (1 + i)/i = 1 - i
    assert GaussRational(1, 1) / G_I == GaussRational(1, -1)


def test_projective_rules():
    assert G_ZERO.invert() == INFINITY
    assert INFINITY.invert() == G_ZERO
    assert INFINITY + G_ONE == INFINITY
    assert G_ONE + INFINITY == INFINITY
    assert -INFINITY == INFINITY
    assert INFINITY * GaussRational(3, -2) == INFINITY
    with pytest.raises(IndeterminateError):
        INFINITY + INFINITY
    with pytest.raises(IndeterminateError):
        G_ZERO * INFINITY
    with pytest.raises(IndeterminateError):
        INFINITY.re


def test_is_real_and_zero():
    assert GaussRational(3, 0).is_real
    assert not GaussRational(3, 1).is_real
    assert INFINITY.is_real  # infinity counts as a classical (real) value
    assert G_ZERO.is_zero()
    assert not INFINITY.is_zero()


def test_mul_i():
    assert G_ONE.mul_i() == G_I
    assert G_I.mul_i() == GaussRational(-1, 0)
    assert INFINITY.mul_i() == INFINITY


def test_str_canonical():
    assert str(GaussRational(Fraction(9, 7), 1)) == "9/7 + 1/1*i"
    assert str(GaussRational(0, 0)) == "0/1 + 0/1*i"
    assert str(GaussRational(Fraction(-1, 2), Fraction(-5, 4))) == "-1/2 - 5/4*i"
    assert str(INFINITY) == "inf"
    assert GaussRational(Fraction(9, 7), 0).real_str() == "9/7"
    assert INFINITY.real_str() == "inf"
    with pytest.raises(IndeterminateError):
        G_I.real_str()


def test_hashable_for_bucketing():
    seen = {GaussRational(1, 2): "x", INFINITY: "y"}
    assert seen[GaussRational(1, 2)] == "x"
    assert seen[GaussRational.infinity()] == "y"


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=9)
finites = st.builds(GaussRational, rationals, rationals)


@given(finites)
def test_div_mul_roundtrip(z):
    if z.is_zero():
        assert z.invert() == INFINITY
        return
    assert z * z.invert() == G_ONE
    assert (G_ONE / z) * z == G_ONE
    assert z.invert().invert() == z


@given(finites, finites)
def test_field_laws(z, w):
    assert z + w == w + z
    assert z * w == w * z
    assert z * (w + G_ONE) == z * w + z
    assert z - z == G_ZERO
