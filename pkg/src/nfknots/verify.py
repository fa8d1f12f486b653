"""The acceptance suite: every check the toolkit certifies, as a registry of
named checks with one pass/fail line each.

Shared by the command-line `verify` subcommand and the test suite.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import braid3, classify, hfk, invariants
from .braid3 import word
from .laurent import LaurentPoly
from .sl2z import Mat2, matrix_to_word
from .diagrams import builders, catalog


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _check(name, fn):
    t0 = time.time()
    try:
        detail = fn() or ""
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    return CheckResult(name, passed, detail, time.time() - t0)


def check_representation():
    assert braid3.rho(word("xyx")) == braid3.rho(word("yxy")) == Mat2(0, 1, -1, 0)
    assert braid3.rho(braid3.delta_power(2)) == Mat2(-1, 0, 0, -1)
    for d in range(-3, 4):
        assert braid3.kernel_power(braid3.delta_power(4 * d)) == d
    return "rho(xyx)=rho(yxy), rho(D^2)=-I, kernel powers -3..3"


def check_surgery_table():
    rows = classify.surgery_table_rows()
    expected = [
        ("T(2,3)", 5, "L(11,8)", 11, 8, 7, 15),
        ("T(-2,3)", -6, "L(11,3)", 11, 3, 4, 7),
        ("T(2,3)", 6, "L(13,8)", 13, 8, 5, 13),
        ("T(-2,3)", -7, "L(13,5)", 13, 5, 8, 13),
        ("T(3,4)", 12, "L(25,18)", 25, 18, 7, 25),
        ("T(-3,4)", -13, "L(25,7)", 25, 7, 18, 25),
        ("T(4,5)", 19, "L(39,32)", 39, 32, 11, 43),
        ("T(-4,5)", -20, "L(39,7)", 39, 7, 28, 35),
    ]
    for row, (g, n, ls, p, q, qbar, base) in zip(rows, expected):
        got = (str(row.gamma), row.n, str(row.lens_space), row.p, row.q, row.qbar, row.trace_base)
        assert got == (g, n, ls, p, q, qbar, base), f"{got} != {(g, n, ls, p, q, qbar, base)}"
        assert row.trace_mod == p
    sols = [sorted(classify.trace_solutions(r)) for r in rows]
    assert sols[0] == [(-2, 1)], sols[0]
    assert sols[1] == [(-1, 0)], sols[1]
    assert all(s == [] for s in sols[2:]), sols[2:]
    return "8 rows entrywise; solutions {(-2,1)}, {(-1,0)}, rest empty"


def check_possible_torus_knots(bound=50):
    rows, survivors = classify.possible_torus_knots(bound)
    got = [(str(g), n) for g, n in rows]
    want = [("T(2,3)", 5), ("T(-2,3)", -6), ("T(2,3)", 6), ("T(-2,3)", -7),
            ("T(3,4)", 12), ("T(-3,4)", -13), ("T(4,5)", 19), ("T(-4,5)", -20)]
    assert got == want, got
    lens_names = sorted(str(m) for _, _, m in survivors)
    assert lens_names == ["L(13,9)", "L(19,16)", "L(5,4)", "L(7,4)"], lens_names
    return f"six torus knots, n-values as tabulated (bound {bound})"


def check_classifications(n_window=6, budget=24):
    cert_u, braids_u = classify.enumerate_unknot_case(n_window, budget)
    want = {classify.canonical_key(word("X")), classify.canonical_key(word("xy"))}
    for n in range(-n_window, n_window + 1):
        member = braid3.concat(braid3.power(word("x"), n), word("Yxy"))
        want.add(classify.canonical_key(member))
    got = {classify.canonical_key(b) for b in braids_u}
    assert got == want, "unknot-case braid set mismatch"

    cert_t, braids_t = classify.enumerate_torus_case(budget)
    got_t = {classify.canonical_key(b) for b in braids_t}
    want_t = {classify.canonical_key(word("xxxYxxy")), classify.canonical_key(word("XXXyXX"))}
    assert got_t == want_t, "torus-case braid set mismatch"

    cert_w, braids_w = classify.enumerate_whitehead_case(budget)
    got_w = {classify.canonical_key(b) for b in braids_w}
    want_w = {classify.canonical_key(word("x")), classify.canonical_key(word("X"))}
    assert got_w == want_w, "trefoil-case braid set mismatch"
    return ("unknot case: x^-1, xy, x^n y^-1 x y; torus case: x^3y^-1x^2y, "
            "x^-3yx^-2; trefoil case: x, x^-1")


def check_determinants(budget=16):
    sevens = ["5_2", "15n43522", "Wh-T23_2"]
    nines = ["Wh+T23_2"]
    for name in sevens:
        assert invariants.determinant(catalog(name), budget) == 7, name
    for name in nines:
        assert invariants.determinant(catalog(name), budget) == 9, name
    for n in range(-4, 5):
        pd = builders.pretzel(-3, 3, 2 * n + 1)
        assert invariants.determinant(pd, budget) == 9, f"pretzel n={n}"
    return "det 7: 5_2, 15n43522, Wh-; det 9: Wh+ and P(-3,3,2n+1), n in [-4,4]"


def check_alexander(budget=16):
    want_pretzel = LaurentPoly(1, {(1,): -2, (0,): 5, (-1,): -2})
    for n in range(-4, 5):
        pd = builders.pretzel(-3, 3, 2 * n + 1)
        assert invariants.alexander_pd(pd) == want_pretzel, f"pretzel n={n}"
    want_52 = LaurentPoly(1, {(1,): 2, (0,): -3, (-1,): 2})
    assert invariants.alexander_pd(catalog("5_2")) == want_52
    assert hfk.alexander_from_table(hfk.TABLE_ROWS["P(-3,3,2n+1)"]) == want_pretzel
    assert hfk.alexander_from_table(hfk.TABLE_ROWS["5_2"]) == want_52
    return "pretzel family -2t+5-2t^-1; 5_2 2t-3+2t^-1; Euler characteristics agree"


def check_homfly(budget=12):
    checked = []
    for name in ["unknot", "5_2", "6_1", "P(-3,3,1)", "15n43522", "Wh+T23_2",
                 "Wh-T23_2", "T(2,3)", "T(2,5)", "T(2,7)"]:
        pd = catalog(name)
        if pd.n_crossings() > budget:
            continue
        p = invariants.homfly(pd, budget)
        assert invariants.homfly_jones_specialization(p) == invariants.jones(pd), name
        if pd.n_crossings() == 0:
            assert invariants.homfly_alexander_in_t(p) == LaurentPoly.one()
        else:
            assert invariants.homfly_alexander_in_t(p) == invariants.alexander_pd(pd), name
        checked.append(name)
    assert len(checked) >= 6
    return f"specializations match jones and alexander on {', '.join(checked)}"


def check_trace_bridge(count=200, seed=11):
    rng = random.Random(seed)
    done = 0
    while done < count:
        w = braid3.random_word(rng, 12)
        if invariants.closure_components(w) != 1:
            continue
        pd = builders.braid_closure(w)
        det = invariants.determinant(pd, budget=24)
        assert det == invariants.h1_from_trace(w), f"{w}: {det} vs trace"
        done += 1
    return f"|2 - tr rho(w)| = det(closure) on {count} random knot closures"


def check_thin_profiles():
    got7 = hfk.enumerate_thin_profiles(7, fibered=False)
    assert [p.dims for p in got7] == [(2, 3, 2)], got7
    pre = hfk.enumerate_thin_profiles(9, fibered=False, genus_exact=1, unit_alexander=False)
    assert sorted(p.dims for p in pre) == [(2, 5, 2), (3, 3, 3)], pre
    post = hfk.enumerate_thin_profiles(9, fibered=False, genus_exact=1)
    assert [p.dims for p in post] == [(2, 5, 2)], post
    return "(7,nf) -> (2,3,2); (9,nf,g=1) -> (2,5,2) after the unit filter"


def check_matrix_roundtrip(count=1000, seed=5):
    rng = random.Random(seed)
    for _ in range(count):
        w = braid3.random_word(rng, 20)
        m = braid3.rho(w)
        v = matrix_to_word(m)
        assert braid3.rho(v) == m, f"rho mismatch for {w}"
        quotient = braid3.concat(v, braid3.inverse(w))
        d = braid3.kernel_power(quotient)
        assert d is not None, f"quotient not central for {w}"
    return f"{count} random words: rho preserved, quotient in the kernel"


def check_unknot_certificates(n_window=6, budget=24):
    certified = [word("X"), word("xy"), word("xxxYxxy"), word("XXXyXX")]
    for n in range(-n_window, n_window + 1):
        certified.append(braid3.concat(braid3.power(word("x"), n), word("Yxy")))
    for w in certified:
        pd = builders.tau_cable_unknot(w, axis=False)
        status, witness = invariants.unknot_certificate(pd, budget)
        assert status == "consistent", f"{w}: {witness}"
    for w in (word("x"), word("X")):
        pd = builders.tau_cable_trefoil(w, axis=False)
        status, witness = invariants.unknot_certificate(pd, budget)
        assert status == "consistent", f"trefoil-template {w}: {witness}"
    rh_trefoil = LaurentPoly(1, {(2,): 1, (6,): 1, (8,): -1})
    for wtxt in ("xY", "XY"):
        pd = builders.tau_cable_unknot(word(wtxt), axis=False)
        status, witness = invariants.unknot_certificate(pd, budget)
        assert status == "refuted", wtxt
        name, value = witness
        assert name == "jones" and value == rh_trefoil, (wtxt, witness)
    return ("all certified braids consistent; xy^-1 and x^-1y^-1 refuted "
            "with the right-handed trefoil as witness")


ALL_CHECKS = [
    ("representation-identities", check_representation),
    ("surgery-table", check_surgery_table),
    ("possible-torus-knots", check_possible_torus_knots),
    ("braid-classifications", check_classifications),
    ("determinants", check_determinants),
    ("alexander-polynomials", check_alexander),
    ("homfly-specializations", check_homfly),
    ("trace-determinant-bridge", check_trace_bridge),
    ("thin-profiles", check_thin_profiles),
    ("matrix-word-roundtrip", check_matrix_roundtrip),
    ("unknot-certificates", check_unknot_certificates),
]


def run_all(n_window=6, q_bound=50, budget=16):
    results = []
    for name, fn in ALL_CHECKS:
        if name == "possible-torus-knots":
            results.append(_check(name, lambda: check_possible_torus_knots(q_bound)))
        elif name == "braid-classifications":
            results.append(_check(name, lambda: check_classifications(n_window)))
        elif name == "unknot-certificates":
            results.append(_check(name, lambda: check_unknot_certificates(n_window)))
        elif name == "determinants":
            results.append(_check(name, lambda: check_determinants(max(budget, 16))))
        else:
            results.append(_check(name, fn))
    return results
