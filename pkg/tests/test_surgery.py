import math

import pytest

from nfknots.lens import Slope, connsum, lens, h1_order, homeomorphic, surgery_on_unknot
from nfknots.surgery import (
    NOT_LENS_CLASSIFIED, UNKNOT, TorusKnot, half_integral_lens_constraint,
    mirror_surgery, montesinos_triple, moser,
)


def test_moser_examples():
    assert moser(TorusKnot(2, 3), Slope(11, 2)) == lens(11, 8)
    assert moser(TorusKnot(2, 3), Slope(6, 1)) == connsum([lens(2, 1), lens(3, 2)])
    assert moser(TorusKnot(4, 5), Slope(39, 2)) == lens(39, 32)
    assert moser(TorusKnot(2, 3), Slope(5, 1)) == lens(5, 4)
    assert moser(TorusKnot(2, 3), Slope(3, 1)) == NOT_LENS_CLASSIFIED


def test_mirror_surgery_examples():
    k, r = mirror_surgery(TorusKnot(-2, 3), Slope(-11, 2))
    assert k == TorusKnot(2, 3) and r == Slope(11, 2)
    assert moser(TorusKnot(-2, 3), Slope(-11, 2)) == lens(11, 3)
    assert moser(TorusKnot(-4, 5), Slope(-39, 2)) == lens(39, 7)
    k2, r2 = mirror_surgery(UNKNOT, Slope(-7, 2))
    assert k2 == UNKNOT and r2 == Slope(7, 2)
    assert mirror_surgery(*mirror_surgery(TorusKnot(2, 3), Slope(11, 2))) == (
        TorusKnot(2, 3), Slope(11, 2))


def test_montesinos_examples():
    t = montesinos_triple(5)
    assert (t.half, t.zero_res, t.one_res) == (Slope(11, 2), Slope(5, 1), Slope(6, 1))
    t0 = montesinos_triple(0)
    assert (t0.half, t0.zero_res, t0.one_res) == (Slope(1, 2), Slope(0, 1), Slope(1, 1))
    tn = montesinos_triple(-6)
    assert (tn.half, tn.zero_res, tn.one_res) == (Slope(-11, 2), Slope(-6, 1), Slope(-5, 1))


def test_half_integral_constraint():
    assert half_integral_lens_constraint(TorusKnot(2, 3)) == {5, 6}
    assert half_integral_lens_constraint(TorusKnot(3, 4)) == {11, 12}
    assert half_integral_lens_constraint(TorusKnot(4, 5)) == {19, 20}
    assert half_integral_lens_constraint(TorusKnot(-2, 3)) == {-6, -7}


def test_h1_consistency():
    for p, q in [(2, 3), (3, 4), (2, 5), (3, 5)]:
        k = TorusKnot(p, q)
        assert h1_order(moser(k, Slope(p * q - 1, 1))) == p * q - 1
        assert h1_order(moser(k, Slope(p * q + 1, 1))) == p * q + 1
        assert h1_order(moser(k, Slope(p * q, 1))) == p * q


def test_half_integral_identity_exhaustive():
    for p in range(2, 13):
        for q in range(2, p):
            if math.gcd(p, q) != 1:
                continue
            k = TorusKnot(p, q)
            for eps in (1, -1):
                num = 2 * p * q + eps
                got = moser(k, Slope(num, 2))
                want = surgery_on_unknot(Slope(num, 2 * q * q))
                assert homeomorphic(got, want, oriented=True), (p, q, eps)


def test_torus_knot_normalization():
    assert TorusKnot(3, -2) == TorusKnot(-3, 2)
    assert TorusKnot(2, 3).mirror() == TorusKnot(-2, 3)
    with pytest.raises(ValueError):
        TorusKnot(2, 4)
    with pytest.raises(ValueError):
        TorusKnot(1, 5)
