"""Exact polynomial link invariants computed from PD codes.

- Kauffman bracket / Jones by planar state contraction: crossings are
  absorbed one at a time while the state tracks a matching on dangling arcs,
  so cost is governed by frontier width rather than 2^crossings.
- Alexander polynomial two ways: a Wirtinger-presentation determinant
  (evaluated at integer points and interpolated exactly) and the reduced
  Burau matrix for 3-braid closures.
- HOMFLY by skein recursion to descending diagrams, with memoization.
- Determinant as |V(-1)| and |Delta(-1)| with mandatory agreement.

The Jones polynomial is returned in the variable u = t^(1/2) (so t^k is
exponent 2k); HOMFLY is returned in (a, q) with skein
a P(+) - a^-1 P(-) = (q - q^-1) P(0).
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly
from . import braid3
from .diagrams.pd import PDCode, _OPPOSITE


class BudgetExceeded(Exception):
    """Diagram exceeds the crossing budget for a brute-force invariant."""


class InvariantMismatch(Exception):
    """Two independent computations of the same invariant disagree."""


DEFAULT_JONES_BUDGET = 16
DEFAULT_HOMFLY_BUDGET = 12

_DELTA_A = LaurentPoly(1, {(2,): -1, (-2,): -1})  # -A^2 - A^-2


def _divide_exact(num, den):
    """Exact division of 1-variable Laurent polynomials."""
    if num.is_zero():
        return num
    rem = dict(num.coeffs)
    den_items = sorted(den.coeffs.items())
    (de,), dc = den_items[-1]
    out = {}
    while rem:
        lead = max(rem)
        nc = rem[lead]
        (ne,) = lead
        if nc % dc:
            raise ValueError("inexact division")
        q, qe = nc // dc, ne - de
        out[(qe,)] = out.get((qe,), 0) + q
        for (e,), c in den_items:
            key = (e + qe,)
            v = rem.get(key, 0) - c * q
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly(1, out)


# ---------------------------------------------------------------------------
# Kauffman bracket / Jones
# ---------------------------------------------------------------------------


def _contraction_order(pd):
    """Greedy order keeping the dangling frontier small."""
    remaining = set(range(len(pd.crossings)))
    seen_arcs = set()
    order = []
    while remaining:
        ci = min(remaining,
                 key=lambda i: (-sum(1 for a in pd.crossings[i].arcs() if a in seen_arcs), i))
        remaining.discard(ci)
        order.append(ci)
        seen_arcs.update(pd.crossings[ci].arcs())
    return order


def _connect(matching, u, v):
    """Join fragment ends u, v; returns 1 if this closes a loop, else 0."""
    if u == v:
        return 1
    fu = matching.pop(u, None)
    if fu is not None:
        matching.pop(fu, None)
    fv = matching.pop(v, None)
    if fv is not None:
        matching.pop(fv, None)
    if fu == v:
        return 1
    left = fu if fu is not None else u
    right = fv if fv is not None else v
    matching[left] = right
    matching[right] = left
    return 0


def kauffman_bracket(pd, budget=DEFAULT_JONES_BUDGET):
    """Bracket polynomial in A, normalized so the unknot gives 1."""
    n = pd.n_crossings()
    if n > budget:
        raise BudgetExceeded(f"{n} crossings exceeds bracket budget {budget}")
    if n == 0:
        return _DELTA_A ** (pd.n_components() - 1)

    # state key: sorted matching pairs on dangling arcs -> [poly, loops]
    states = {(): (LaurentPoly.one(), 0)}
    for ci in _contraction_order(pd):
        c = pd.crossings[ci]
        if c.over == "NWSE":
            a_pairs = ((c.nw, c.ne), (c.sw, c.se))
            b_pairs = ((c.nw, c.sw), (c.ne, c.se))
        else:
            a_pairs = ((c.nw, c.sw), (c.ne, c.se))
            b_pairs = ((c.nw, c.ne), (c.sw, c.se))
        new_states = {}
        for key, (coeff, loops) in states.items():
            for pairs, aexp in ((a_pairs, 1), (b_pairs, -1)):
                matching = {}
                for ku, kv in key:
                    matching[ku] = kv
                    matching[kv] = ku
                total_loops = loops
                for u, v in pairs:
                    total_loops += _connect(matching, u, v)
                newkey = tuple(sorted((u, v) for u, v in matching.items() if u < v))
                poly = coeff * LaurentPoly(1, {(aexp,): 1})
                if newkey in new_states:
                    pc, pl = new_states[newkey]
                    m = min(pl, total_loops)
                    pc = pc * (_DELTA_A ** (pl - m))
                    poly = poly * (_DELTA_A ** (total_loops - m))
                    new_states[newkey] = (pc + poly, m)
                else:
                    new_states[newkey] = (poly, total_loops)
        states = new_states

    total = LaurentPoly.zero()
    for key, (coeff, loops) in states.items():
        assert not key, "dangling arcs left after the contraction"
        total = total + coeff * (_DELTA_A ** loops)
    total = total * (_DELTA_A ** pd.free_loops)
    return _divide_exact(total, _DELTA_A)


def jones(pd, budget=DEFAULT_JONES_BUDGET):
    """Writhe-normalized Jones polynomial in u = t^(1/2) (doubled exponents)."""
    bracket = kauffman_bracket(pd, budget)
    w = pd.writhe()
    # V = (-A)^(-3w) * <D>, then substitute A = u^(-1/2), i.e. u = A^(-2)
    normalized = bracket.shift(-3 * w) * (-1 if w % 2 else 1)
    out = {}
    for (e,), cf in normalized.coeffs.items():
        if e % 2:
            raise InvariantMismatch("odd A-exponent after writhe normalization")
        out[(-e // 2,)] = cf
    return LaurentPoly(1, out)


def jones_in_t(v_u):
    """Rewrite a Jones value with even u-exponents in the variable t."""
    return v_u.scale_exponents(Fraction(1, 2))


def jones_determinant(pd, budget=DEFAULT_JONES_BUDGET):
    """|V(-1)|, evaluated at u = i."""
    v = jones(pd, budget)
    re, im = v.evaluate_gaussian(0, 1)
    if re and im:
        raise InvariantMismatch(f"|V(-1)| not an integer: {re}+{im}i")
    return abs(re) if re else abs(im)


# ---------------------------------------------------------------------------
# Alexander polynomial from a PD (Wirtinger determinant)
# ---------------------------------------------------------------------------


def _wirtinger_data(pd):
    """Per crossing: (under_in, over, under_out) as overpass-arc classes, sign."""
    parent = {a: a for a in pd.arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    passes = []
    for ci, c in enumerate(pd.crossings):
        under_diag = "NESW" if c.over == "NWSE" else "NWSE"
        u_in = pd._inflow_slot(ci, under_diag)
        o_in = pd._inflow_slot(ci, c.over)
        slots = c.slots()
        rec = (slots[u_in], slots[o_in], slots[_OPPOSITE[u_in]], slots[_OPPOSITE[o_in]])
        passes.append(rec)
    for (ui, oi, uo, oo) in passes:
        ra, rb = find(oi), find(oo)
        if ra != rb:
            parent[ra] = rb
    rows = []
    for ci, (ui, oi, uo, oo) in enumerate(passes):
        rows.append((find(ui), find(oi), find(uo), pd.signs[ci]))
    classes = sorted({find(a) for a in pd.arcs})
    return rows, classes


def alexander_pd(pd):
    """Symmetric Alexander polynomial with Delta(1) = 1; knots only."""
    if pd.n_components() != 1:
        raise ValueError("alexander_pd needs a knot diagram (one component)")
    if pd.n_crossings() == 0:
        return LaurentPoly.one()
    poly = _alexander_raw(pd)
    return _normalize_alexander(poly)


def _alexander_raw(pd):
    rows, classes = _wirtinger_data(pd)
    index = {cls: i for i, cls in enumerate(classes)}
    n = len(rows)
    m = len(classes)

    def entry_row(ui, oi, uo, sign, t):
        row = [Fraction(0)] * m
        if sign > 0:
            row[index[ui]] += t
            row[index[oi]] += 1 - t
            row[index[uo]] += -1
        else:
            row[index[ui]] += 1
            row[index[oi]] += t - 1
            row[index[uo]] += -t
        return row

    # delete the last row and last column; interpolate det over n+1 points
    degree_bound = n
    points = list(range(2, 2 + degree_bound + 1))
    values = []
    for t in points:
        mat = [entry_row(ui, oi, uo, s, Fraction(t))[: m - 1] for (ui, oi, uo, s) in rows[: n - 1]]
        values.append(_det_fractions(mat))
    coeffs = _interpolate(points, values, degree_bound)
    return LaurentPoly(1, {(i,): c for i, c in enumerate(coeffs) if c})


def _det_fractions(mat):
    n = len(mat)
    if n == 0:
        return Fraction(1)
    mat = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                factor = mat[r][col] * inv
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    return det


def _interpolate(points, values, degree):
    """Exact Newton interpolation; returns integer coefficients 0..degree."""
    xs = points[: degree + 1]
    ys = [Fraction(v) for v in values[: degree + 1]]
    table = ys[:]
    newton = []
    for level in range(len(xs)):
        newton.append(table[0])
        nxt = []
        for i in range(len(table) - 1):
            nxt.append((table[i + 1] - table[i]) / (xs[i + 1 + level] - xs[i]))
        table = nxt
        if not table:
            break
    # expand Newton form
    coeffs = [Fraction(0)] * (degree + 1)
    acc = [Fraction(1)]  # product (x - x0)...(x - x_{k-1})
    for k, ck in enumerate(newton):
        for i, a in enumerate(acc):
            coeffs[i] += ck * a
        if k < degree:
            new_acc = [Fraction(0)] * (len(acc) + 1)
            for i, a in enumerate(acc):
                new_acc[i + 1] += a
                new_acc[i] += -xs[k] * a
            acc = new_acc
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InvariantMismatch("non-integer interpolated coefficient")
        out.append(int(c))
    return out


def _normalize_alexander(poly):
    """Strip units, center symmetrically, fix the sign so Delta(1) = 1."""
    if poly.is_zero():
        return poly
    lo, hi = poly.exponent_range()
    if (lo + hi) % 2:
        raise InvariantMismatch("Alexander polynomial with odd exponent span")
    centered = poly.shift(-(lo + hi) // 2)
    mirror = centered.invert_variable()
    if mirror != centered:
        raise InvariantMismatch("Alexander polynomial not symmetric after centering")
    at_one = centered.evaluate_int(1)
    if at_one == 1:
        return centered
    if at_one == -1:
        return -centered
    raise InvariantMismatch(f"Delta(1) = {at_one}, expected +-1")


# ---------------------------------------------------------------------------
# Reduced Burau for 3-braids, Alexander of closures
# ---------------------------------------------------------------------------

_T = LaurentPoly(1, {(1,): 1})
_BURAU = {
    ("x", 1): ((LaurentPoly(1, {(1,): -1}), LaurentPoly.one()),
               (LaurentPoly.zero(), LaurentPoly.one())),
    ("x", -1): ((LaurentPoly(1, {(-1,): -1}), LaurentPoly(1, {(-1,): 1})),
                (LaurentPoly.zero(), LaurentPoly.one())),
    ("y", 1): ((LaurentPoly.one(), LaurentPoly.zero()),
               (LaurentPoly(1, {(1,): 1}), LaurentPoly(1, {(1,): -1}))),
    ("y", -1): ((LaurentPoly.one(), LaurentPoly.zero()),
                (LaurentPoly.one(), LaurentPoly(1, {(-1,): -1}))),
}


def burau_reduced(word):
    """Reduced Burau matrix of a 3-braid, as a 2x2 of Laurent polynomials.

    Specializes entrywise at t = -1 to the SL(2,Z) representation.
    """
    m = ((LaurentPoly.one(), LaurentPoly.zero()),
         (LaurentPoly.zero(), LaurentPoly.one()))
    for letter in word:
        g = _BURAU[(letter.gen, letter.sign)]
        m = _mat2_mul(m, g)
    return m


def _mat2_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def burau_at_minus_one(word):
    m = burau_reduced(word)
    vals = []
    for i in (0, 1):
        for j in (0, 1):
            v = m[i][j].evaluate_int(-1)
            assert v.denominator == 1
            vals.append(int(v))
    from .sl2z import Mat2
    return Mat2(*vals)


def closure_components(word):
    """Number of components of the 3-braid closure (cycles of the permutation)."""
    perm = list(range(3))
    for letter in word:
        i = 0 if letter.gen == "x" else 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * 3
    count = 0
    for i in range(3):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def alexander_closure(word):
    """Alexander polynomial of the 3-braid closure via reduced Burau.

    Delta = det(Burau(w) - I) * (t - 1) / (t^3 - 1), normalized for knots;
    for multi-component closures the unnormalized polynomial is returned
    (zero for split links).
    """
    m = burau_reduced(word)
    a = m[0][0] - LaurentPoly.one()
    d = m[1][1] - LaurentPoly.one()
    det = a * d - m[0][1] * m[1][0]
    if det.is_zero():
        return det
    num = det * LaurentPoly(1, {(1,): 1, (0,): -1})
    den = LaurentPoly(1, {(3,): 1, (0,): -1})
    poly = _divide_exact(num, den)
    if closure_components(word) != 1:
        return poly
    return _normalize_alexander(_make_symmetric(poly))


def _make_symmetric(poly):
    """Shift by a unit so the polynomial is symmetric, if possible."""
    lo, hi = poly.exponent_range()
    if (lo + hi) % 2 == 0:
        cand = poly.shift(-(lo + hi) // 2)
        if cand.invert_variable() == cand:
            return cand
        if cand.invert_variable() == -cand:
            return cand
    return poly


def h1_from_trace(word):
    """|2 - tr rho(w)|: the order of H_1 of the branched double cover of the
    braid closure (0 meaning infinite)."""
    return abs(2 - braid3.rho(word).trace())


# ---------------------------------------------------------------------------
# Determinant
# ---------------------------------------------------------------------------


def determinant(pd, budget=DEFAULT_JONES_BUDGET):
    """det = |V(-1)| = |Delta(-1)|, both routes computed and compared."""
    via_jones = jones_determinant(pd, budget)
    if pd.n_components() == 1:
        delta = alexander_pd(pd)
        via_alex = abs(delta.evaluate_int(-1))
        assert via_alex.denominator == 1
        via_alex = int(via_alex)
        if via_alex != via_jones:
            raise InvariantMismatch(
                f"determinant mismatch: |V(-1)|={via_jones}, |Delta(-1)|={via_alex}")
    return via_jones


# ---------------------------------------------------------------------------
# HOMFLY
# ---------------------------------------------------------------------------


class _SkeinDiagram:
    """Mutable oriented diagram for the skein recursion.

    Crossings are (under_in, over_in, under_out, over_out, sign) over arc
    classes maintained by union-find.
    """

    def __init__(self, pd):
        self.parent = {}
        self.crossings = {}
        self.free_loops = pd.free_loops
        for ci, c in enumerate(pd.crossings):
            under_diag = "NESW" if c.over == "NWSE" else "NWSE"
            u_in = pd._inflow_slot(ci, under_diag)
            o_in = pd._inflow_slot(ci, c.over)
            slots = c.slots()
            self.crossings[ci] = [
                slots[u_in], slots[o_in],
                slots[_OPPOSITE[u_in]], slots[_OPPOSITE[o_in]],
                pd.signs[ci],
            ]
            for a in c.arcs():
                self.parent.setdefault(a, a)

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def copy(self):
        new = object.__new__(_SkeinDiagram)
        new.parent = dict(self.parent)
        new.crossings = {ci: rec[:] for ci, rec in self.crossings.items()}
        new.free_loops = self.free_loops
        return new

    def switch(self, ci):
        ui, oi, uo, oo, s = self.crossings[ci]
        self.crossings[ci] = [oi, ui, oo, uo, -s]

    def smooth(self, ci):
        # oriented smoothing: under-in joins over-out, over-in joins under-out;
        # arc classes are crossing-free segments, so a reflexive join is
        # always a new free loop
        ui, oi, uo, oo, _ = self.crossings[ci]
        del self.crossings[ci]
        if not self.union(ui, oo):
            self.free_loops += 1
        if not self.union(oi, uo):
            self.free_loops += 1

    def key(self):
        items = []
        for ci in sorted(self.crossings):
            ui, oi, uo, oo, s = self.crossings[ci]
            items.append((self.find(ui), self.find(oi), self.find(uo), self.find(oo), s))
        return (tuple(items), self.free_loops)


def _first_bad_crossing(diag):
    """Walk components from their smallest arc; return the first crossing met
    first on its under-strand, or None if the diagram is descending."""
    in_map = {}
    for ci, (ui, oi, uo, oo, s) in diag.crossings.items():
        in_map.setdefault(diag.find(ui), []).append((ci, "under"))
        in_map.setdefault(diag.find(oi), []).append((ci, "over"))
    all_arcs = set()
    for ci, (ui, oi, uo, oo, s) in diag.crossings.items():
        for a in (ui, oi, uo, oo):
            all_arcs.add(diag.find(a))
    visited_cross = set()
    visited_arcs = set()
    for start in sorted(all_arcs):
        if start in visited_arcs:
            continue
        arc = start
        while True:
            if arc in visited_arcs:
                break
            visited_arcs.add(arc)
            entries = in_map.get(arc, [])
            if not entries:
                break
            # an arc class flows into exactly one crossing passage
            ci, role = entries[0]
            ui, oi, uo, oo, s = diag.crossings[ci]
            if ci not in visited_cross:
                if role == "under":
                    return ci
                visited_cross.add(ci)
            arc = diag.find(uo if role == "under" else oo)
            if arc == start:
                break
    return None


def _count_components(diag):
    in_map = {}
    out_map = {}
    arcs = set()
    for ci, (ui, oi, uo, oo, s) in diag.crossings.items():
        in_map[diag.find(ui)] = (ci, "under")
        in_map[diag.find(oi)] = (ci, "over")
        arcs.update(diag.find(a) for a in (ui, oi, uo, oo))
    count = 0
    seen = set()
    for start in sorted(arcs):
        if start in seen:
            continue
        count += 1
        arc = start
        while arc not in seen:
            seen.add(arc)
            ci, role = in_map[arc]
            ui, oi, uo, oo, s = diag.crossings[ci]
            arc = diag.find(uo if role == "under" else oo)
    return count + diag.free_loops


def homfly(pd, budget=DEFAULT_HOMFLY_BUDGET):
    """HOMFLY polynomial P(a, q) of a knot diagram, unknot -> 1.

    Computed in (a, z) by skein recursion and converted via z = q - q^-1.
    """
    if pd.n_components() != 1:
        raise ValueError("homfly implemented for knot diagrams only")
    if pd.n_crossings() > budget:
        raise BudgetExceeded(f"{pd.n_crossings()} crossings exceeds homfly budget {budget}")
    az = _homfly_az(_SkeinDiagram(pd), {})
    # substitute z -> q - q^-1 (z-exponents are >= 0 for knots)
    zq = LaurentPoly(1, {(1,): 1, (-1,): -1})
    out = LaurentPoly.zero(2)
    for (ea, ez), c in az.coeffs.items():
        if ez < 0:
            raise InvariantMismatch("negative z-exponent for a knot")
        term = zq ** ez
        for (eq,), c2 in term.coeffs.items():
            out = out + LaurentPoly(2, {(ea, eq): c * c2})
    return out


_H_DELTA = LaurentPoly(2, {(1, -1): 1, (-1, -1): -1})  # (a - a^-1) z^-1


def _homfly_az(diag, memo):
    key = diag.key()
    if key in memo:
        return memo[key]
    bad = _first_bad_crossing(diag)
    if bad is None:
        comp = _count_components(diag)
        result = _H_DELTA ** (comp - 1)
    else:
        sign = diag.crossings[bad][4]
        switched = diag.copy()
        switched.switch(bad)
        smoothed = diag.copy()
        smoothed.smooth(bad)
        ps = _homfly_az(switched, memo)
        p0 = _homfly_az(smoothed, memo)
        if sign > 0:
            # P+ = a^-2 P- + a^-1 z P0
            result = ps * LaurentPoly(2, {(-2, 0): 1}) + p0 * LaurentPoly(2, {(-1, 1): 1})
        else:
            # P- = a^2 P+ - a z P0
            result = ps * LaurentPoly(2, {(2, 0): 1}) - p0 * LaurentPoly(2, {(1, 1): 1})
    memo[key] = result
    return result


def homfly_jones_specialization(p_aq):
    """Substitute a = u^-2, q = u: should equal jones() in u = t^(1/2)."""
    out = LaurentPoly.zero()
    for (ea, eq), c in p_aq.coeffs.items():
        out = out + LaurentPoly(1, {(-2 * ea + eq,): c})
    return out


def homfly_alexander_specialization(p_aq):
    """Substitute a = 1, q = u: gives Delta(t) with u = t^(1/2)."""
    out = LaurentPoly.zero()
    for (ea, eq), c in p_aq.coeffs.items():
        out = out + LaurentPoly(1, {(eq,): c})
    return out


def homfly_alexander_in_t(p_aq):
    u_poly = homfly_alexander_specialization(p_aq)
    return u_poly.scale_exponents(Fraction(1, 2))


# ---------------------------------------------------------------------------
# Unknot certificates
# ---------------------------------------------------------------------------


def unknot_certificate(pd, budget=DEFAULT_JONES_BUDGET):
    """('consistent', None) if V = 1, Delta = 1, det = 1; otherwise
    ('refuted', (invariant_name, value)).  Consistency is evidence, not proof."""
    if pd.n_components() != 1:
        raise ValueError("unknot certificates need a knot diagram")
    v = jones(pd, budget)
    if v != LaurentPoly.one():
        return "refuted", ("jones", v)
    delta = alexander_pd(pd)
    if delta != LaurentPoly.one():
        return "refuted", ("alexander", delta)
    d = determinant(pd, budget)
    if d != 1:
        return "refuted", ("determinant", d)
    return "consistent", None
