import random

import pytest

from nfknots import braid3
from nfknots.braid3 import word
from nfknots.diagrams import braid_closure, catalog, pretzel, twist_knot, torus_2_bridge
from nfknots.diagrams.morse import MorseBuilder
from nfknots.invariants import (
    BudgetExceeded, InvariantMismatch, alexander_closure, alexander_pd,
    burau_at_minus_one, burau_reduced, closure_components, determinant,
    h1_from_trace, homfly, homfly_alexander_in_t, homfly_jones_specialization,
    jones, jones_determinant, kauffman_bracket, unknot_certificate,
)
from nfknots.laurent import LaurentPoly
from nfknots.sl2z import Mat2, matrix_to_word

T25_JONES = LaurentPoly(1, {(4,): 1, (8,): 1, (10,): -1, (12,): 1, (14,): -1})
T25_ALEX = LaurentPoly(1, {(2,): 1, (1,): -1, (0,): 1, (-1,): -1, (-2,): 1})
RH_TREFOIL = LaurentPoly(1, {(2,): 1, (6,): 1, (8,): -1})


def test_jones_unknot_and_torus():
    assert jones(catalog("unknot")) == LaurentPoly.one()
    assert jones(braid_closure(word("xxxxxy"))) == T25_JONES
    assert jones(torus_2_bridge(3)) == RH_TREFOIL


def test_jones_multiplicative_distant_union():
    # a braid closure with one extra split circle
    b = MorseBuilder()
    b.cup(1).cup(2).cup(3)
    for _ in range(5):
        b.cross(4, "R")
    b.cross(5, "R")
    b.cap(3).cap(2).cap(1)
    b.cup(1).cap(1)
    pd = b.build()
    delta = LaurentPoly(1, {(1,): -1, (-1,): -1})
    assert jones(pd) == T25_JONES * delta


def test_jones_budget():
    with pytest.raises(BudgetExceeded):
        jones(catalog("Wh+T23_2"), budget=10)


def test_determinant_examples():
    assert determinant(pretzel(-3, 3, 1)) == 9
    assert determinant(catalog("5_2")) == 7
    assert determinant(catalog("15n43522")) == 7
    assert determinant(catalog("unknot")) == 1
    assert jones_determinant(braid_closure(word("xxxxxy"))) == 5


def test_alexander_pd_examples():
    assert alexander_pd(catalog("5_2")) == LaurentPoly(1, {(1,): 2, (0,): -3, (-1,): 2})
    assert alexander_pd(catalog("unknot")) == LaurentPoly.one()
    for n in (-2, 0, 2):
        assert alexander_pd(pretzel(-3, 3, 2 * n + 1)) == \
            LaurentPoly(1, {(1,): -2, (0,): 5, (-1,): -2})
    with pytest.raises(ValueError):
        alexander_pd(braid_closure(word("y")))


def test_alexander_closure_examples():
    assert alexander_closure(word("xxxxxy")) == T25_ALEX
    assert alexander_closure(word("y")).is_zero()
    assert closure_components(word("")) == 3
    # figure-eight as the closure of (xy^-1)^2
    assert alexander_closure(word("xYxY")) == LaurentPoly(1, {(1,): -1, (0,): 3, (-1,): -1})


def test_alexander_two_routes_agree():
    rng = random.Random(23)
    done = 0
    while done < 200:
        w = braid3.random_word(rng, 12)
        if closure_components(w) != 1:
            continue
        assert alexander_closure(w) == alexander_pd(braid_closure(w)), str(w)
        done += 1


def test_burau_specializes_to_rho():
    rng = random.Random(9)
    for _ in range(200):
        w = braid3.random_word(rng, 15)
        assert burau_at_minus_one(w) == braid3.rho(w)
    m = burau_reduced(word("x"))
    assert m[0][0] == LaurentPoly(1, {(1,): -1})


def test_burau_determinant_is_unit():
    rng = random.Random(10)
    for _ in range(50):
        w = braid3.random_word(rng, 12)
        m = burau_reduced(w)
        d = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        assert len(d.coeffs) == 1 and abs(next(iter(d.coeffs.values()))) == 1


def test_h1_from_trace_examples():
    assert h1_from_trace(word("")) == 0
    assert h1_from_trace(word("xxxxxy")) == 5
    w = matrix_to_word(Mat2(7, 11, 5, 8))
    assert braid3.rho(w).trace() == 15
    assert h1_from_trace(w) == 13
    if closure_components(w) == 1:
        assert determinant(braid_closure(w), budget=24) == 13


def test_h1_trace_bridge_sweep():
    rng = random.Random(14)
    done = 0
    while done < 60:
        w = braid3.random_word(rng, 10)
        if closure_components(w) != 1:
            continue
        assert determinant(braid_closure(w), budget=24) == h1_from_trace(w)
        done += 1


def test_homfly_examples():
    assert homfly(catalog("unknot")) == LaurentPoly.one(2)
    p = homfly(pretzel(-3, 3, 1))
    assert homfly_alexander_in_t(p) == LaurentPoly(1, {(1,): -2, (0,): 5, (-1,): -2})
    assert homfly_jones_specialization(p) == jones(pretzel(-3, 3, 1))
    tre = homfly(torus_2_bridge(3))
    assert homfly_jones_specialization(tre) == RH_TREFOIL


def test_homfly_budget_and_components():
    with pytest.raises(BudgetExceeded):
        homfly(catalog("15n43522"), budget=12)
    with pytest.raises(ValueError):
        homfly(braid_closure(word("y")))


def test_homfly_full_catalog_within_budget():
    for name in ["5_2", "6_1", "P(-3,3,1)", "T(2,3)", "T(2,5)", "T(2,7)"]:
        pd = catalog(name)
        p = homfly(pd)
        assert homfly_jones_specialization(p) == jones(pd), name
        assert homfly_alexander_in_t(p) == alexander_pd(pd), name


def test_unknot_certificate_examples():
    from nfknots.diagrams import tau_cable_unknot
    status, witness = unknot_certificate(tau_cable_unknot(word("X"), axis=False), budget=24)
    assert status == "consistent" and witness is None
    status, witness = unknot_certificate(tau_cable_unknot(word("xY"), axis=False), budget=24)
    assert status == "refuted"
    assert witness[0] == "jones" and witness[1] == RH_TREFOIL
    status, _ = unknot_certificate(catalog("unknot"))
    assert status == "consistent"
    status, witness = unknot_certificate(catalog("5_2"))
    assert status == "refuted"


def test_bracket_unknot_and_kinks():
    b = MorseBuilder()
    b.cup(1).cross(1, "R").cap(1)
    pd = b.build()
    assert jones(pd) == LaurentPoly.one()
    assert kauffman_bracket(pd) == LaurentPoly(1, {(-3,): -1})
