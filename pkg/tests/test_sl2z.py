import random

import pytest

from nfknots import braid3
from nfknots.braid3 import word, rho, exponent_sum, kernel_power, concat, inverse
from nfknots.sl2z import Mat2, IDENT, matrix_to_word, mul, det, trace, neg


def equal_mod_delta4(u, v):
    """Same braid up to multiplication by the kernel generator."""
    if rho(u) != rho(v):
        return False
    return (exponent_sum(u) - exponent_sum(v)) % 12 == 0


def test_arithmetic_examples():
    assert mul(rho(word("x")), rho(word("y"))) == rho(word("xy")) == Mat2(0, 1, -1, 1)
    assert trace(Mat2(7, 11, 5, 8)) == 15
    assert det(IDENT) == 1
    assert neg(IDENT) == Mat2(-1, 0, 0, -1)


def test_matrix_to_word_paper_values():
    cases = [
        (Mat2(4, 11, 1, 3), word("xxxYxx")),
        (Mat2(8, 11, 5, 7), word("xYxYYx")),
        (Mat2(7, 11, 5, 8), word("xYYxYx")),
    ]
    for m, expected in cases:
        w = matrix_to_word(m)
        assert rho(w) == m
        assert equal_mod_delta4(w, expected), (str(w), str(expected))


def test_matrix_to_word_identity():
    assert matrix_to_word(IDENT) == word("")
    assert matrix_to_word(Mat2(-1, 0, 0, -1)) == braid3.delta_power(2)


def test_matrix_to_word_rejects_bad_det():
    with pytest.raises(ValueError):
        matrix_to_word(Mat2(1, 0, 0, 2))
    with pytest.raises(ValueError):
        matrix_to_word(Mat2(0, 1, 1, 0))


def test_roundtrip_sweep():
    rng = random.Random(5)
    for _ in range(1000):
        w = braid3.random_word(rng, 20)
        m = rho(w)
        v = matrix_to_word(m)
        assert rho(v) == m
        # quotient lies in the kernel
        q = concat(v, inverse(w))
        assert kernel_power(q) is not None
