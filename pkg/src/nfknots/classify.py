"""Classification engines: solve the trace and word-length constraints that
pin down which 3-braids close the two tangle templates into unknots, rebuild
the braid families from their matrices, and emit replayable certificates.

The pipeline per case:
  1. tabulate candidate surgery descriptions (torus-knot/lens rows),
  2. solve the trace constraint (-1)^e (q + qbar + (k+l) p) = 2 +- n,
  3. factor the matrix through the braid representation,
  4. pin the central power d from word-length (exponent-sum) constraints
     carried by the identified closures,
  5. canonicalize up to reversal and conjugation by powers of y.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import braid3
from .braid3 import BraidWord, word
from .sl2z import Mat2, matrix_to_word
from .lens import Slope, homeomorphic, lens, mod_inverse, divisibility_le3_up_to_equivalence
from .surgery import UNKNOT, TorusKnot, moser, NOT_LENS_CLASSIFIED
from .diagrams.builders import tau_cable_unknot, tau_cable_trefoil, braid_closure
from . import invariants


# ---------------------------------------------------------------------------
# canonical representatives up to reversal and y-conjugation
# ---------------------------------------------------------------------------


def canonical_key(w):
    """Class invariant under reversal and y-conjugation.

    The key is the least (max-entry-norm, entries, exponent sum) of the
    representation matrix over all representatives; the norm comes first
    because conjugate matrices grow without bound in both directions, so a
    purely lexicographic minimum does not exist.
    """
    return _canonical(w)[0]


def canonical_witness(w):
    """A representative word realizing the canonical key."""
    return _canonical(w)[1]


def _matrix_key(v):
    m = braid3.rho(v)
    norm = max(abs(x) for x in m.entries())
    return (norm, m.entries(), braid3.exponent_sum(v))


def _canonical(w):
    best = None
    best_norm = None
    for u in (w, braid3.reverse(w)):
        # scan outward until the norm has been non-improving for a while
        for direction in (1, -1):
            a = 0
            stale = 0
            while stale <= len(u) + 16:
                v = braid3.conjugate_by_y(u, direction * a)
                key = _matrix_key(v)
                cand = (key, str(v))
                if best is None or cand < best:
                    best = cand
                if best_norm is None or key[0] < best_norm:
                    best_norm = key[0]
                    stale = 0
                elif key[0] > best_norm:
                    stale += 1
                a += 1
    return best


def braid_names():
    """Canonical keys of the individually named braids."""
    return {
        canonical_key(word("X")): "x^-1",
        canonical_key(word("xy")): "xy",
        canonical_key(word("x")): "x",
        canonical_key(word("xY")): "xy^-1",
        canonical_key(word("XY")): "x^-1y^-1",
        canonical_key(word("xxxYxxy")): "x^3y^-1x^2y",
        canonical_key(word("XXXyXX")): "x^-3yx^-2",
    }


def family_member_index(w, window=40):
    """If w is in the x^n y^-1 x y family up to the symmetries, return n."""
    n = braid3.exponent_sum(w) - 1
    if abs(n) > window:
        return None
    member = braid3.concat(braid3.power(word("x"), n), word("Yxy"))
    if canonical_key(member) == canonical_key(w):
        return n
    return None


def describe_braid(w):
    names = braid_names()
    key = canonical_key(w)
    if key in names:
        return names[key]
    n = family_member_index(w)
    if n is not None:
        return f"x^{n}y^-1xy"
    return str(canonical_witness(w))


# ---------------------------------------------------------------------------
# case rows and the trace constraint
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseRow:
    """One row of the half-integral surgery table: gamma, n, the lens space
    of the (2n+1)/2 surgery, and the trace formula (-1)^e(base + mod*(k+l))."""

    gamma: object               # TorusKnot or UNKNOT
    n: int
    lens_space: object
    p: int
    q: int
    qbar: int
    r: int
    trace_base: int
    trace_mod: int

    def describe(self):
        g = "U" if self.gamma == UNKNOT else str(self.gamma)
        return (f"gamma={g} n={self.n} cover={self.lens_space} "
                f"(p,q,qbar)=({self.p},{self.q},{self.qbar}) "
                f"tr=(-1)^e({self.trace_base}+{self.trace_mod}(k+l))")


def make_row(gamma, n):
    """Row for the (2n+1)/2 surgery on gamma (a torus knot or the unknot)."""
    if gamma == UNKNOT:
        # cover is S^3_{(2n+1)/2}(U): (p, q, qbar, r) = (2n+1, 2, n+1, 1)
        p = 2 * n + 1
        if p < 0:
            raise ValueError("unknot rows use nonnegative-normalized slopes")
        q, (qbar, r) = 2, mod_inverse(2, p) if p > 1 else (0, -1)
        if p == 1:
            qbar, r = 0, -1
        m = moser(UNKNOT, Slope(2 * n + 1, 2))
    else:
        m = moser(gamma, Slope(2 * n + 1, 2))
        if m == NOT_LENS_CLASSIFIED or m.kind != "lens":
            raise ValueError(f"(2n+1)/2 surgery on {gamma} at n={n} is not a lens space")
        p, q = m.p, m.q
        qbar, r = mod_inverse(q, p)
    return CaseRow(gamma, n, m, p, q, qbar, r, q + qbar, p)


def unknot_row(n):
    """Trace data for the unknot case: base n+3, modulus 2n+1 (valid for any
    integer n; the lens normalization is bypassed)."""
    return CaseRow(UNKNOT, n, None, 2 * n + 1, 2, n + 1, 1, n + 3, 2 * n + 1)


def trace_solutions(row):
    """All (k+l, e) with (-1)^e(base + mod*(k+l)) = 2 +- n."""
    out = set()
    for e in (0, 1):
        for s in (1, -1):
            target = (2 + s * row.n) * (1 if e == 0 else -1)
            num = target - row.trace_base
            if row.trace_mod == 0:
                if num == 0:
                    raise ValueError("degenerate trace row")
                continue
            if num % row.trace_mod == 0:
                out.add((num // row.trace_mod, e))
    return out


def pin_down_d(n, k_plus_l, e):
    """Central powers d allowed by the word-length constraint:
    6(2d+e) = (k+l) +- 1 for n != +-1, else 6(2d+e) + n - (k+l) in {-2,0,2}."""
    targets = ([k_plus_l + 1, k_plus_l - 1] if n not in (1, -1)
               else [t - n + k_plus_l for t in (-2, 0, 2)])
    out = set()
    for v in targets:
        if v % 6 == 0 and (v // 6 - e) % 2 == 0:
            out.add((v // 6 - e) // 2)
    return out


# ---------------------------------------------------------------------------
# Table of possible torus knots
# ---------------------------------------------------------------------------


TABLE_GAMMA_ORDER = [
    (TorusKnot(2, 3), 5), (TorusKnot(-2, 3), -6),
    (TorusKnot(2, 3), 6), (TorusKnot(-2, 3), -7),
    (TorusKnot(3, 4), 12), (TorusKnot(-3, 4), -13),
    (TorusKnot(4, 5), 19), (TorusKnot(-4, 5), -20),
]


def surgery_table_rows():
    """The eight torus-knot rows (lens space, p, q, qbar, trace formula)."""
    return [make_row(g, n) for g, n in TABLE_GAMMA_ORDER]


def possible_torus_knots(bound=50):
    """(gamma, n) pairs surviving the braid-index constraint.

    For coprime (P, Q) = (Q+1, Q) with 2 <= Q <= bound, the cover
    L(PQ+eps, Q^2) of a 3-braid closure must be a 2-bridge link of braid
    index at most 3, so some odd representative s must divide 2r+1 or 2r-1;
    survivors give n = PQ-1 (eps=-1) or n = PQ (eps=+1), plus the mirrored
    rows with n replaced by -n-1.
    """
    survivors = []
    for Q in range(2, bound + 1):
        P = Q + 1
        for eps in (-1, 1):
            rr = P * Q + eps
            ss = (Q * Q) % rr
            if divisibility_le3_up_to_equivalence(rr, ss):
                n = P * Q - 1 if eps == -1 else P * Q
                small, big = sorted((P, Q))
                survivors.append((TorusKnot(small, big), n, lens(rr, ss)))
    rows = []
    for gamma, n, m in survivors:
        rows.append((gamma, n))
        rows.append((gamma.mirror(), -n - 1))
    return rows, survivors


# ---------------------------------------------------------------------------
# identify T(2,k) closures from their covers (encoded conjugacy data)
# ---------------------------------------------------------------------------


def identify_two_strand_torus(manifold):
    """If the manifold is the branched double cover of T(2,k), return the
    signed k; None otherwise.  Covers: L(k,1) for k>0, L(|k|,|k|-1) for k<0."""
    if manifold.kind == "S1xS2":
        return 0
    if manifold.kind != "lens":
        return None
    p = manifold.p
    if homeomorphic(manifold, lens(p, 1), oriented=True):
        return p
    if homeomorphic(manifold, lens(p, p - 1), oriented=True):
        return -p
    return None


def allowed_exponent_sums(k):
    """Exponent sums of 3-braids whose closure is T(2,k): conjugates of
    x^k y^(+-1) for |k| >= 2, of y^(+-1) for the 2-unlink (k=0), and of
    {xy, xy^-1, x^-1y^-1} for k = +-1."""
    if k == 0:
        return {1, -1}
    if k in (1, -1):
        return {2, 0, -2}
    return {k + 1, k - 1}


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass
class Certificate:
    case: str
    inputs: dict
    steps: list = field(default_factory=list)
    braids: list = field(default_factory=list)
    knots: list = field(default_factory=list)
    status: str = "ok"

    def add_step(self, label, constraint, survivors):
        self.steps.append({
            "label": label,
            "constraint": constraint,
            "survivors": survivors,
        })

    def to_json(self):
        return json.dumps({
            "case": self.case,
            "inputs": self.inputs,
            "steps": self.steps,
            "braids": self.braids,
            "knots": self.knots,
            "status": self.status,
        }, indent=1, sort_keys=True)


def _certify_unknotted(w, template, budget=24):
    """Certificate-grade check of the template closure: 'consistent' or
    ('refuted', witness)."""
    build = tau_cable_unknot if template == "unknot" else tau_cable_trefoil
    pd = build(w, axis=False)
    if pd.n_components() != 1:
        return "refuted", ("components", pd.n_components())
    status, witness = invariants.unknot_certificate(pd, budget)
    if status == "consistent":
        return "consistent", None
    name, value = witness
    from .laurent import LaurentPoly
    return "refuted", (name, value.canonical() if isinstance(value, LaurentPoly) else value)


# ---------------------------------------------------------------------------
# the three enumerations
# ---------------------------------------------------------------------------


def enumerate_unknot_case(n_window=6, budget=24, certify=True):
    """Braids closing the first template into an unknot when the lifted
    curve is unknotted: x^-1, xy, and the family x^n y^-1 x y."""
    cert = Certificate("unknot-cable", {"n_window": n_window})
    candidates = {}
    solution_log = []
    for n in range(-n_window, n_window + 1):
        row = unknot_row(n)
        for m, e in sorted(trace_solutions(row)):
            for d in sorted(pin_down_d(n, m, e)):
                beta = _assemble_unknot_braid(n, m, e, d)
                key = canonical_key(beta)
                candidates.setdefault(key, (beta, []))[1].append((n, m, e, d))
                solution_log.append({"n": n, "k_plus_l": m, "e": e, "d": d,
                                     "braid": str(beta)})
    cert.add_step(
        "trace-and-length",
        "(-1)^e(n+3+(k+l)(2n+1)) = 2 +- n with 6(2d+e) = (k+l) +- 1 "
        "(n != +-1) or 6(2d+e)+n-(k+l) in {-2,0,2} (n = +-1)",
        solution_log,
    )

    # the symmetric factorization family consists of reverses of this one:
    # r(D^{4d+2e} y^-k x^n y^-1 x y^-l) is y-conjugate to
    # D^{4d+2e} y^-k x y^-1 x^n y^-l; verified on the assembled braids
    for key, (beta, prov) in candidates.items():
        rev = braid3.reverse(beta)
        assert canonical_key(rev) == key, "reversal closure failed"
    cert.add_step("reversal-family",
                  "the second factorization family is obtained by reversal",
                  {"checked": len(candidates)})

    survivors = {}
    exclusions = []
    for key, (beta, prov) in sorted(candidates.items(), key=lambda kv: str(kv[1][0])):
        if certify:
            status, witness = _certify_unknotted(beta, "unknot", budget)
        else:
            status, witness = "consistent", None
        if status == "refuted":
            exclusions.append({"braid": describe_braid(beta), "witness": list(witness)})
        else:
            survivors[key] = beta
    cert.add_step("closure-certificates",
                  "template closure must have the invariants of an unknot",
                  {"excluded": exclusions})

    cert.braids = sorted(describe_braid(b) for b in survivors.values())
    cert.knots = sorted({braid_to_knot("unknot-cable", b) for b in survivors.values()})
    return cert, list(survivors.values())


def _assemble_unknot_braid(n, m, e, d):
    """D^(4d+2e) x^n y^-1 x y^-m, the k = 0 representative."""
    parts = [braid3.delta_power(4 * d + 2 * e),
             braid3.power(word("x"), n),
             word("Y"),
             word("x"),
             braid3.power(word("y"), -m)]
    out = BraidWord()
    for p in parts:
        out = braid3.concat(out, p)
    # factorization sanity: rho matches the matrix product it encodes
    mat = Mat2(1, 0, 0, 1)
    mat = mat * Mat2(1, n, 0, 1) * Mat2(1, 0, 1, 1) * Mat2(1, 1, 0, 1)
    mat = mat * Mat2(1, 0, -(-m), 1)
    want = mat if e == 0 else -mat
    assert braid3.rho(out) == want, "factorization identity failed"
    return out


def enumerate_torus_case(budget=24, certify=True):
    """Braids closing the first template into an unknot when the lifted
    curve is a nontrivial torus knot: x^3 y^-1 x^2 y and x^-3 y x^-2."""
    cert = Certificate("unknot-cable-torus", {})
    rows = surgery_table_rows()
    cert.add_step("surgery-table",
                  "half-integral covers and trace formulas for each candidate",
                  [row.describe() for row in rows])

    surviving = []
    sols = {}
    for row in rows:
        s = trace_solutions(row)
        sols[row.describe()] = sorted(s)
        if s:
            surviving.append((row, sorted(s)))
    cert.add_step("trace-constraint",
                  "(-1)^e(q+qbar+(k+l)p) = 2 +- n",
                  {k: [list(x) for x in v] for k, v in sols.items()})

    final = []
    for row, solutions in surviving:
        for m, e in solutions:
            final.extend(_torus_branch(cert, row, m, e))

    out = {}
    for beta in final:
        if certify:
            status, witness = _certify_unknotted(beta, "unknot", budget)
            if status == "refuted":
                cert.add_step("closure-certificates",
                              "template closure not an unknot", describe_braid(beta))
                continue
        out[canonical_key(beta)] = beta
    cert.braids = sorted(describe_braid(b) for b in out.values())
    cert.knots = sorted({braid_to_knot("unknot-cable", b) for b in out.values()})
    return cert, list(out.values())


def _match_exponent(w, target):
    """Adjust w by a power of the kernel generator so exponent sums agree."""
    diff = target - braid3.exponent_sum(w)
    assert diff % 12 == 0, "words differ by more than the kernel"
    return braid3.concat(braid3.delta_power(4 * (diff // 12)), w)


def _torus_branch(cert, row, m, e):
    """Reconstruct the braid family for one surviving torus row."""
    m1 = Mat2(row.qbar, row.p, row.r, row.q)
    m2 = Mat2(row.q, row.p, row.r, row.qbar)
    w1 = matrix_to_word(m1)
    w2 = _match_exponent(matrix_to_word(m2), braid3.exponent_sum(w1))
    ytail = braid3.power(word("y"), -m)

    def family(base, d):
        return braid3.concat(
            braid3.concat(braid3.delta_power(4 * d + 2 * e), base), ytail)

    # families from the two factorizations are reverses of each other
    assert canonical_key(family(w1, 0)) == canonical_key(braid3.reverse(family(w2, 0)))
    cert.add_step("factorization",
                  f"matrix factors through the braid representation: "
                  f"{m1} and {m2}; second family is the reversal of the first",
                  {"word_1": str(w1), "word_2": str(w2)})

    # choose the integral resolution whose cover is a single lens space;
    # its closure is then a 2-strand torus link, which pins the exponent sum
    d_solutions = None
    for slope_n, which in ((row.n, "braid-closure"), (row.n + 1, "closure-times-y^-1")):
        cover = moser(row.gamma, Slope(slope_n, 1))
        if cover == NOT_LENS_CLASSIFIED or cover.kind != "lens":
            continue
        k = identify_two_strand_torus(cover)
        if k is None:
            continue
        allowed = allowed_exponent_sums(k)
        if which == "closure-times-y^-1":
            allowed = {a + 1 for a in allowed}
        base_exp = braid3.exponent_sum(family(w1, 0))
        ds = sorted(d for d in range(-4, 5) if base_exp + 12 * d in allowed)
        cert.add_step(
            "word-length",
            f"{which} covers {cover}, a T(2,{k}) closure; exponent sum "
            f"{base_exp}+12d must lie in {sorted(allowed)}",
            {"d": ds})
        d_solutions = ds
        break
    assert d_solutions is not None and len(d_solutions) == 1, "d not pinned"
    return [family(w1, d_solutions[0])]


def enumerate_whitehead_case(budget=24, certify=True):
    """Braids closing the second template into an unknot: x and x^-1."""
    cert = Certificate("trefoil-cable", {})
    # cover of the crossing-changed closure is S^3: (p,q,qbar,r) = (1,1,1,0)
    row = CaseRow(UNKNOT, None, None, 1, 1, 1, 0, 2, 1)
    sols = set()
    for e in (0, 1):
        target = 2 * (1 if e == 0 else -1)
        sols.add((target - 2, e))
    sols = sorted(sols)
    cert.add_step("trace-constraint",
                  "(-1)^e(k+l+2) = tr = 2 since the closure is a 2-unlink",
                  [list(s) for s in sols])
    assert sols == [(-4, 1), (0, 0)]

    final = {}
    for m, e in sols:
        base = braid3.concat(braid3.delta_power(2 * e), word("x"))
        base = braid3.concat(base, braid3.power(word("y"), -m))
        # closure is the 2-component unlink: exponent sum must be +-1
        allowed = allowed_exponent_sums(0)
        base_exp = braid3.exponent_sum(base)
        ds = [d for d in range(-4, 5) if base_exp + 12 * d in allowed]
        assert len(ds) == 1
        beta = braid3.concat(braid3.delta_power(4 * ds[0]), base)
        cert.add_step("word-length",
                      f"(k+l,e)=({m},{e}): exponent sum {base_exp}+12d in {sorted(allowed)}",
                      {"d": ds, "braid": str(beta)})
        if e == 1:
            # central identity: D^-2 x y^4 is conjugate to x^-1
            assert canonical_key(beta) == canonical_key(word("X"))
        if certify:
            status, witness = _certify_unknotted(beta, "trefoil", budget)
            assert status == "consistent", witness
        # unlink evidence for the braid closure itself
        closure = braid_closure(beta)
        v = invariants.jones(closure, budget)
        unlink2 = invariants.jones(braid_closure(word("y")), budget)
        cert.add_step("closure-unlink-evidence",
                      "braid closure has the Jones polynomial of the 2-unlink",
                      {"braid": describe_braid(beta), "matches": v == unlink2})
        final[canonical_key(beta)] = beta

    cert.braids = sorted(describe_braid(b) for b in final.values())
    cert.knots = sorted({braid_to_knot("trefoil-cable", b) for b in final.values()})
    return cert, list(final.values())


# ---------------------------------------------------------------------------
# braid -> knot lookup
# ---------------------------------------------------------------------------


def braid_to_knot(case, w):
    """Name of the lifted knot for a certified braid; the mirror rule sends
    a braid b to m(b)y."""
    key = canonical_key(w)
    if case == "unknot-cable":
        if key == canonical_key(word("X")):
            return "5_2"
        if key == canonical_key(word("xy")):
            return "mirror(5_2)"
        if key == canonical_key(word("xxxYxxy")):
            return "15n43522"  # chirality recorded up to mirroring
        if key == canonical_key(word("XXXyXX")):
            return "mirror(15n43522)"
        n = family_member_index(w)
        if n is not None:
            return f"P(-3,3,{2 * n + 1})"
        raise KeyError(f"braid {w} is not in the certified unknot-cable list")
    if case == "trefoil-cable":
        if key == canonical_key(word("x")):
            return "Wh+T23_2"
        if key == canonical_key(word("X")):
            return "Wh-T23_2"
        raise KeyError(f"braid {w} is not in the certified trefoil-cable list")
    raise ValueError(f"unknown case {case!r}")


def mirror_partner(w):
    """The braid m(w)y, whose lifted knot is the mirror of w's."""
    return braid3.concat(braid3.mirror(w), word("y"))
