"""Laurent polynomial ring: exact ops, canonical text, algebraic laws."""

import pytest
from hypothesis import given, strategies as st

from vtangle.laurent import A, A_INV, LOOP_FACTOR, ONE, ZERO, LaurentPoly


def test_zero_and_one():
    assert ZERO.is_zero()
    assert not ONE.is_zero()
    assert ZERO == LaurentPoly({})
    assert ONE == LaurentPoly({0: 1})
    assert ZERO == LaurentPoly({3: 0})  # zero coefficients are dropped


def test_monomial_and_shift():
    assert LaurentPoly.monomial(3) == LaurentPoly({3: 1})
    assert LaurentPoly.monomial(-2, 5) == LaurentPoly({-2: 5})
    assert A.shift(-2) == A_INV
    assert (A + ONE).shift(4) == LaurentPoly({5: 1, 4: 1})


def test_ring_ops_small():
    # (1 - A^-4) * A^2 = A^2 - A^-2
    assert (ONE - A_INV ** 4) * (A ** 2) == A ** 2 - A_INV ** 2
    assert LOOP_FACTOR == -(A * A) - A_INV * A_INV
    assert A * A_INV == ONE
    assert (A + A_INV) + (-A_INV) == A
    assert (A + A_INV) * (A - A_INV) == A ** 2 - A_INV ** 2


def test_int_scalars():
    assert 2 * A == A + A
    assert A * 2 == A + A
    assert (A + ONE) - ONE == A
    assert -(A - ONE) == ONE - A


def test_pow():
    assert A ** 0 == ONE
    assert A ** 5 == LaurentPoly({5: 1})
    assert A_INV ** 3 == LaurentPoly({-3: 1})
    assert (A ** 2) ** -1 == A_INV ** 2  # unit monomials invert
    with pytest.raises(ArithmeticError):
        (A + ONE) ** -1


def test_str_canonical():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(A) == "A"
    assert str(A_INV) == "A^-1"
    assert str(LaurentPoly({4: 1, 0: -1, -4: 1})) == "A^4 - 1 + A^-4"
    assert str(LaurentPoly({4: 2})) == "2*A^4"
    assert str(LOOP_FACTOR) == "-A^2 - A^-2"


def test_hash_and_eq():
    assert hash(A * A) == hash(LaurentPoly({2: 1}))
    assert A != A_INV
    d = {A: "a"}
    assert d[LaurentPoly({1: 1})] == "a"


coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=-6, max_value=6)
polys = st.dictionaries(exps, coeffs, max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p
    assert p - p == ZERO


@given(polys, exps)
def test_shift_is_monomial_mult(p, k):
    assert p.shift(k) == p * LaurentPoly.monomial(k)
