"""PD codes with an explicit local embedding.

A crossing stores the four incident arc labels at compass slots (nw, ne,
sw, se), with strand segments running nw-se and ne-sw, plus which diagonal
is the over-strand.  This is enough to recover orientations, signs, the
component structure, and the classical X[a,b,c,d] text form
(a = incoming under-arc, then counterclockwise).

Crossingless loop components cannot be expressed in a PD tuple, so the code
carries a free_loops count alongside.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Crossing:
    nw: int
    ne: int
    sw: int
    se: int
    over: str  # "NWSE" or "NESW"

    def slots(self):
        return {"NW": self.nw, "NE": self.ne, "SW": self.sw, "SE": self.se}

    def arcs(self):
        return (self.nw, self.ne, self.sw, self.se)


_OPPOSITE = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
# counterclockwise successor with x right / y up: NE(45) NW(135) SW(225) SE(315)
_CCW_NEXT = {"NE": "NW", "NW": "SW", "SW": "SE", "SE": "NE"}
# direction of travel for a strand leaving the crossing through a slot
_SLOT_DIR = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}


class PDCode:
    def __init__(self, crossings, free_loops=0, inflow_hints=None):
        self.crossings = list(crossings)
        self.free_loops = free_loops
        self._validate()
        self._orient(inflow_hints or ())

    # -- structure ---------------------------------------------------------

    def _validate(self):
        counts = {}
        for c in self.crossings:
            for a in c.arcs():
                counts[a] = counts.get(a, 0) + 1
        bad = {a: n for a, n in counts.items() if n != 2}
        if bad:
            raise ValueError(f"arcs without exactly two endpoints: {bad}")
        self.arcs = sorted(counts)

    def _slot_table(self):
        table = {}
        for i, c in enumerate(self.crossings):
            for slot, arc in c.slots().items():
                table.setdefault(arc, []).append((i, slot))
        return table

    def _orient(self, inflow_hints):
        """Walk components, assigning a direction to every arc.

        arc_flow[arc] = (tail, head) endpoints as (crossing, slot) pairs,
        flowing tail -> head.  inflow_hints lists (crossing, slot) pairs that
        should be inflows if possible; a component is flipped when most of
        its hinted passages disagree (used for text round-trips).
        """
        table = self._slot_table()
        hints = set(inflow_hints)
        self.arc_flow = {}
        self.components = []
        seen = set()
        for start in self.arcs:
            if start in seen:
                continue
            comp = []
            arc = start
            tail = table[arc][0]
            while arc not in seen:
                seen.add(arc)
                comp.append(arc)
                eps = table[arc]
                head = eps[1] if tail == eps[0] else eps[0]
                self.arc_flow[arc] = (tail, head)
                ci, slot = head
                out_slot = _OPPOSITE[slot]
                arc = self.crossings[ci].slots()[out_slot]
                tail = (ci, out_slot)
            if hints:
                good = sum(1 for a in comp if self.arc_flow[a][1] in hints)
                bad = sum(1 for a in comp if self.arc_flow[a][0] in hints)
                if bad > good:
                    for a in comp:
                        t, h = self.arc_flow[a]
                        self.arc_flow[a] = (h, t)
            self.components.append(comp)

        self.signs = [self._sign_at(i) for i in range(len(self.crossings))]

    def _inflow_slot(self, ci, diagonal):
        """Which of the diagonal's two slots the strand flows in through."""
        c = self.crossings[ci]
        s1, s2 = ("NW", "SE") if diagonal == "NWSE" else ("NE", "SW")
        arc1 = c.slots()[s1]
        tail, head = self.arc_flow[arc1]
        if head == (ci, s1):
            return s1
        if tail == (ci, s1):
            return s2
        # arc1 occurs at this crossing on the other diagonal slot only;
        # use the second slot's arc instead
        arc2 = c.slots()[s2]
        tail, head = self.arc_flow[arc2]
        if head == (ci, s2):
            return s2
        return s1

    def _sign_at(self, ci):
        over_in = self._inflow_slot(ci, self.crossings[ci].over)
        under_diag = "NESW" if self.crossings[ci].over == "NWSE" else "NWSE"
        under_in = self._inflow_slot(ci, under_diag)
        ox, oy = _SLOT_DIR[_OPPOSITE[over_in]]
        ux, uy = _SLOT_DIR[_OPPOSITE[under_in]]
        d = ox * uy - oy * ux
        assert d in (2, -2), "over/under slots must sit on opposite diagonals"
        return 1 if d > 0 else -1

    # -- queries -----------------------------------------------------------

    def n_crossings(self):
        return len(self.crossings)

    def n_components(self):
        return len(self.components) + self.free_loops

    def writhe(self):
        return sum(self.signs)

    def component_of_arc(self, arc):
        for i, comp in enumerate(self.components):
            if arc in comp:
                return i
        raise KeyError(arc)

    def pd_tuples(self):
        """Classical (a,b,c,d) tuples with signs: a = under inflow, then ccw."""
        out = []
        for i, c in enumerate(self.crossings):
            under_diag = "NESW" if c.over == "NWSE" else "NWSE"
            a_slot = self._inflow_slot(i, under_diag)
            order = [a_slot]
            for _ in range(3):
                order.append(_CCW_NEXT[order[-1]])
            slots = c.slots()
            out.append((tuple(slots[s] for s in order), self.signs[i]))
        return out

    def __repr__(self):
        return f"PDCode({self.n_crossings()} crossings, {self.n_components()} components)"


def emit_pd(pd):
    """Canonical text: 'X+[a,b,c,d],X-[e,f,g,h],...' with an 'O' per free loop."""
    parts = []
    for (a, b, c, d), s in pd.pd_tuples():
        parts.append(f"X{'+' if s > 0 else '-'}[{a},{b},{c},{d}]")
    parts.extend(["O"] * pd.free_loops)
    return ",".join(parts)


_X_RE = re.compile(r"X([+-]?)\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text):
    """Parse 'X[a,b,c,d]' lists (optionally signed, with optional 'O' loops).

    Each tuple is embedded with the under-in arc at NE and b,c,d
    counterclockwise (b at NW), so the over-diagonal is NW-SE.  Component
    orientations follow the under-in hints, which makes parse(emit(pd))
    reproduce emit_pd output exactly.
    """
    free_loops = len(re.findall(r"(?<![\w\[])O(?![\w])", text))
    raw = _X_RE.findall(text)
    if not raw and free_loops == 0:
        raise ValueError(f"no crossings parsed from {text!r}")
    crossings = [
        Crossing(nw=int(b), ne=int(a), sw=int(c), se=int(d), over="NWSE")
        for _, a, b, c, d in raw
    ]
    hints = [(i, "NE") for i in range(len(crossings))]
    pd = PDCode(crossings, free_loops=free_loops, inflow_hints=hints)
    for idx, (s, *_rest) in enumerate(raw):
        if s and ((s == "+") != (pd.signs[idx] > 0)):
            raise ValueError(f"sign annotation mismatch at crossing {idx}")
    return pd
