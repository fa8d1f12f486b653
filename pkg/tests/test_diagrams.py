import pytest

from nfknots.braid3 import word, concat, power
from nfknots import braid3
from nfknots.diagrams import (
    braid_closure, plat_closure, twist_knot, pretzel, torus_2_bridge,
    whitehead_double_trefoil, tau_cable_unknot, tau_cable_trefoil,
    catalog, catalog_names, parse_pd, emit_pd,
)
from nfknots.diagrams.catalog import CatalogError, catalog_entry
from nfknots.diagrams.morse import MorseBuilder
from nfknots.invariants import jones, alexander_pd, closure_components
from nfknots.laurent import LaurentPoly

BUDGET = 26


def test_builders_emit_valid_pd():
    # arc double-occurrence is enforced by the PDCode constructor
    for pd in [braid_closure(word("xxYxy")), plat_closure(word("xYx")),
               twist_knot(3), pretzel(-3, 3, 5), whitehead_double_trefoil(1),
               tau_cable_unknot(word("xy")), tau_cable_trefoil(word("x"))]:
        assert pd.n_crossings() > 0


def test_closure_components_match_permutation():
    for text in ["", "x", "y", "xy", "xxxxxy", "xYxY", "xxYY"]:
        w = word(text)
        assert braid_closure(w).n_components() == closure_components(w)


def test_closure_writhe_is_exponent_sum():
    for text in ["xxxxxy", "XXyxY", "xyxyxy", "YYX"]:
        w = word(text)
        assert braid_closure(w).writhe() == braid3.exponent_sum(w)


def test_closure_examples():
    assert braid_closure(word("")).n_components() == 3
    pd = braid_closure(word("xxxxxy"))
    assert pd.n_components() == 1 and pd.n_crossings() == 6
    assert braid_closure(word("y")).n_components() == 2


def test_unlink_closure_jones():
    two_unlink = LaurentPoly(1, {(1,): -1, (-1,): -1})
    assert jones(braid_closure(word("y")), BUDGET) == two_unlink


def test_pretzel_crossing_count_and_trefoil():
    assert pretzel(-3, 3, 1).n_crossings() == 7
    assert pretzel(1, 1, 1).n_components() == 1
    v = jones(pretzel(1, 1, 1))
    trefoils = {LaurentPoly(1, {(2,): 1, (6,): 1, (8,): -1})}
    trefoils.add(next(iter(trefoils)).invert_variable())
    assert v in trefoils


def test_six_one_two_transcriptions_agree():
    a, b = pretzel(-3, 3, 1), catalog("6_1")
    assert jones(a) == jones(b)
    assert alexander_pd(a) == alexander_pd(b)


def test_catalog_names_and_errors():
    names = catalog_names()
    for needed in ["5_2", "6_1", "15n43522", "Wh+T23_2", "Wh-T23_2", "unknot"]:
        assert needed in names
    assert catalog("T(2,7)").n_crossings() == 7
    with pytest.raises(CatalogError):
        catalog("19n_whatever")


def test_catalog_frozen_checks():
    for name in ["5_2", "6_1", "15n43522", "Wh+T23_2", "Wh-T23_2"]:
        entry = catalog_entry(name)
        pd = catalog(name)
        assert alexander_pd(pd).canonical() == entry["alexander"]


def test_pd_text_roundtrip():
    for pd in [twist_knot(3), pretzel(-3, 3, 1), braid_closure(word("xxYxy"))]:
        text = emit_pd(pd)
        again = parse_pd(text)
        assert emit_pd(again) == text
        assert jones(again, BUDGET) == jones(pd, BUDGET)
        assert [s for _, s in again.pd_tuples()] == [s for _, s in pd.pd_tuples()]


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_pd("nothing here")
    with pytest.raises(ValueError):
        parse_pd("X[1,2,3,4]")  # arcs must appear exactly twice


def test_morse_builder_validation():
    b = MorseBuilder()
    b.cup(1)
    with pytest.raises(ValueError):
        b.cross(5, "R")
    with pytest.raises(ValueError):
        b.build()  # strands left open


def test_free_loop_counting():
    b = MorseBuilder()
    b.cup(1).cap(1)
    pd = b.build()
    assert pd.n_crossings() == 0 and pd.n_components() == 1
    assert jones(pd) == LaurentPoly.one()


# -- the two tangle templates -------------------------------------------------


def test_template_resolutions_match_closures():
    for text in ["x", "xyX", "Xyy"]:
        w = word(text)
        assert jones(tau_cable_unknot(w, axis=False, clasp="0"), BUDGET) == \
            jones(braid_closure(w), BUDGET)
        assert jones(tau_cable_unknot(w, axis=False, clasp="1"), BUDGET) == \
            jones(braid_closure(concat(w, word("Y"))), BUDGET)
        assert jones(tau_cable_unknot(w, axis=False, clasp="RL"), BUDGET) == \
            jones(plat_closure(w), BUDGET)


def test_template_change_matches_plat_up_to_link_orientation():
    w = word("xxY")
    v1 = jones(tau_cable_unknot(w, axis=False, clasp="RL"), BUDGET)
    v2 = jones(plat_closure(w), BUDGET)
    assert any(v1 == v2.shift(6 * k) for k in range(-3, 4))


def test_template_unknot_certify_claims():
    one = LaurentPoly.one()
    for text in ["X", "xy", "xxxYxxy", "XXXyXX", "Yxy", "xYxy", "XXYxy"]:
        assert jones(tau_cable_unknot(word(text), axis=False), BUDGET) == one, text


def test_template_trefoil_refutations():
    rh = LaurentPoly(1, {(2,): 1, (6,): 1, (8,): -1})
    for text in ["xY", "XY"]:
        assert jones(tau_cable_unknot(word(text), axis=False), BUDGET) == rh, text


def test_template_axis_component():
    full = tau_cable_unknot(word("X"), axis=True)
    assert full.n_components() == 2
    just_u = tau_cable_unknot(word("X"), axis=False)
    assert just_u.n_components() == 1
    full2 = tau_cable_trefoil(word("x"), axis=True)
    assert full2.n_components() == 2


def test_second_template_claims():
    one = LaurentPoly.one()
    for a in (-2, -1, 0, 1, 2):
        for eps in ("x", "X"):
            w = braid3.conjugate_by_y(word(eps), a)
            assert jones(tau_cable_trefoil(w, axis=False), BUDGET) == one, (a, eps)
    # non-members are visibly not unknots
    assert jones(tau_cable_trefoil(word("y"), axis=False), BUDGET) != one


def test_second_template_y_conjugation_invariance_of_jones():
    base = jones(tau_cable_trefoil(word("x"), axis=False), BUDGET)
    for a in (1, 2):
        w = braid3.conjugate_by_y(word("x"), a)
        assert jones(tau_cable_trefoil(w, axis=False), BUDGET) == base


def test_whitehead_crossing_counts():
    assert whitehead_double_trefoil(1).n_crossings() == 16
    assert whitehead_double_trefoil(-1).n_crossings() == 16
    assert whitehead_double_trefoil(1, twists=3).n_crossings() == 14
