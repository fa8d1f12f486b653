import itertools
import math

import pytest

from nfknots.lens import (
    S3, S1XS2, Slope, connsum, lens, homeomorphic, h1_order, mod_inverse,
    murasugi_braid_index, murasugi_divisibility, reverse_orientation,
    surgery_on_unknot, two_bridge_representatives,
    braid_index_le3_up_to_equivalence, divisibility_le3_up_to_equivalence,
)


def test_surgery_on_unknot_examples():
    assert surgery_on_unknot(Slope(11, 3)) == lens(11, 3)
    assert surgery_on_unknot(Slope(1, 7)) == S3
    assert surgery_on_unknot(Slope(0, 1)) == S1XS2
    assert surgery_on_unknot(Slope(-5, 4)) == lens(5, 1)


def test_slope_normalization():
    assert Slope(22, 6) == Slope(11, 3)
    assert Slope(-3, -6) == Slope(1, 2)
    assert Slope(5, 0) == Slope(1, 0)
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_mod_inverse_examples():
    assert mod_inverse(8, 11) == (7, 5)
    for n in range(1, 8):
        qbar, r = mod_inverse(2, 2 * n + 1)
        assert qbar == n + 1 and 2 * qbar == r * (2 * n + 1) + 1
    assert mod_inverse(1, 1) == (0, -1)
    with pytest.raises(ValueError):
        mod_inverse(2, 4)


def test_mod_inverse_consistency():
    for p in range(1, 60):
        for q in range(1, p + 5):
            if math.gcd(p, q) != 1:
                continue
            qbar, r = mod_inverse(q, p)
            assert q * qbar - r * p == 1
            assert 0 <= qbar < max(p, 1)


def test_homeomorphic_examples():
    assert homeomorphic(lens(5, 4), lens(5, 1), oriented=False)
    assert not homeomorphic(lens(5, 4), lens(5, 1), oriented=True)
    assert reverse_orientation(lens(5, 1)) == lens(5, 4)
    assert homeomorphic(lens(7, 4), lens(7, 2), oriented=True)
    assert homeomorphic(lens(7, 1), lens(7, 1))


def test_normalization_idempotent():
    m = lens(11, 25)
    assert lens(m.p, m.q) == m
    s = connsum([lens(3, 2), lens(2, 1)])
    assert connsum(list(s.parts)) == s


def test_homeomorphic_equivalence_relation():
    spaces = [lens(p, q) for p in range(2, 41) for q in range(1, p) if math.gcd(p, q) == 1]
    by_p = {}
    for m in spaces:
        by_p.setdefault(m.p, []).append(m)
    for p, group in by_p.items():
        for a in group:
            assert homeomorphic(a, a)
        for a, b in itertools.combinations(group, 2):
            assert homeomorphic(a, b) == homeomorphic(b, a)
        # transitivity within each p
        for a, b, c in itertools.combinations(group, 3):
            if homeomorphic(a, b) and homeomorphic(b, c):
                assert homeomorphic(a, c)


def test_h1_order_examples():
    assert h1_order(lens(13, 8)) == 13
    assert h1_order(S1XS2) == 0
    assert h1_order(S3) == 1
    assert h1_order(connsum([lens(3, 2), lens(2, 1)])) == 6


def test_murasugi_examples():
    assert murasugi_braid_index(5, 1) == 2
    assert murasugi_braid_index(12, 5) == 3
    assert murasugi_braid_index(11, 3) == 3
    assert murasugi_braid_index(7, 3) == "more"
    with pytest.raises(ValueError):
        murasugi_braid_index(7, 4)


def test_murasugi_divisibility_examples():
    assert murasugi_divisibility(13, 9)
    assert murasugi_divisibility(19, 3)
    assert murasugi_divisibility(7, 5)
    assert not murasugi_divisibility(11, 9)


def test_braid_index_3_implies_divisibility():
    for r in range(3, 501):
        for s in range(1, r, 2):
            if math.gcd(r, s) != 1:
                continue
            if murasugi_braid_index(r, s) == 3:
                assert murasugi_divisibility(r, s), (r, s)


def test_equivalence_closed_queries():
    assert two_bridge_representatives(7, 4) == [3, 5]
    assert divisibility_le3_up_to_equivalence(7, 4)
    assert divisibility_le3_up_to_equivalence(5, 4)
    assert not divisibility_le3_up_to_equivalence(11, 9)
    # the exact criterion is stricter than the divisibility condition
    assert braid_index_le3_up_to_equivalence(12, 5)
    assert not braid_index_le3_up_to_equivalence(7, 4)
