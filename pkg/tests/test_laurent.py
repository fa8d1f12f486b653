from fractions import Fraction

import pytest

from nfknots.laurent import LaurentPoly


def test_arithmetic():
    t = LaurentPoly.var()
    p = 2 * t - 3 + 2 * (t ** -1)
    assert p.coefficient(1) == 2 and p.coefficient(0) == -3
    assert (p - p).is_zero()
    assert (t - 1) * (t + 1) == t ** 2 - 1
    assert p.evaluate_int(-1) == Fraction(-7)


def test_no_zero_coefficients():
    p = LaurentPoly(1, {(3,): 5, (1,): 0})
    assert (1,) not in p.coeffs
    q = p + LaurentPoly(1, {(3,): -5})
    assert q.is_zero() and not q.coeffs


def test_canonical_roundtrip():
    p = LaurentPoly(1, {(2,): 1, (-2,): 1, (0,): -1})
    assert LaurentPoly.from_canonical(p.canonical()) == p
    two = LaurentPoly(2, {(1, -1): 3, (0, 2): -1})
    assert LaurentPoly.from_canonical(two.canonical(), nvars=2) == two
    assert LaurentPoly.zero().canonical() == "0"


def test_gaussian_evaluation():
    p = LaurentPoly(1, {(2,): 1, (0,): 1})     # u^2 + 1 at u=i -> 0
    assert p.evaluate_gaussian(0, 1) == (0, 0)
    q = LaurentPoly(1, {(-1,): 1})
    assert q.evaluate_gaussian(0, 1) == (0, -1)
    with pytest.raises(ValueError):
        LaurentPoly(1, {(-1,): 1}).evaluate_gaussian(2, 0)


def test_substitution_two_vars():
    p = LaurentPoly(2, {(1, 0): 1, (0, 2): 1})   # a + q^2
    out = p.substitute(0, LaurentPoly(1, {(-2,): 1}))  # a -> u^-2
    assert out == LaurentPoly(1, {(-2,): 1, (2,): 1})


def test_invert_and_scale():
    p = LaurentPoly(1, {(4,): 1, (-2,): 3})
    assert p.invert_variable() == LaurentPoly(1, {(-4,): 1, (2,): 3})
    assert p.scale_exponents(Fraction(1, 2)) == LaurentPoly(1, {(2,): 1, (-1,): 3})
    with pytest.raises(ValueError):
        LaurentPoly(1, {(1,): 1}).scale_exponents(Fraction(1, 2))


def test_pretty():
    p = LaurentPoly(1, {(1,): 2, (0,): -3, (-1,): 2})
    assert p.pretty(("t",)) == "2*t - 3 + 2*t^-1"
