"""Build PD codes from Morse-position event scripts.

A diagram is scanned top to bottom as a sequence of events acting on a row
of numbered columns (1-based, left to right):

    ("cup", i)        birth: insert two new strands at columns i, i+1
    ("cap", i)        death: join the strands at columns i, i+1
    ("x", i, over)    crossing between columns i, i+1; over is "L" or "R"

A positive braid generator (right-handed crossing, both strands downward)
is ("x", i, "R").  Planarity holds by construction, and the event order is
kept on each crossing as a good sweep order for state-sum evaluation.
"""

from __future__ import annotations

from .pd import Crossing, PDCode


class MorseBuilder:
    def __init__(self):
        self.cols = []          # open arc id per column
        self.next_arc = 1
        self.crossings = []
        self.parent = {}        # union-find over arc ids
        self.touched = set()    # roots of classes that meet a crossing
        self.free_loops = 0

    # -- union-find ----------------------------------------------------------

    def _find(self, a):
        while self.parent.get(a, a) != a:
            self.parent[a] = self.parent.get(self.parent[a], self.parent[a])
            a = self.parent[a]
        return a

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.parent[ra] = rb
            if ra in self.touched:
                self.touched.add(rb)
        return rb

    def _touch(self, a):
        self.touched.add(self._find(a))

    def _new_arc(self):
        a = self.next_arc
        self.next_arc += 1
        return a

    # -- events ----------------------------------------------------------------

    def cup(self, i):
        if not (1 <= i <= len(self.cols) + 1):
            raise ValueError(f"cup at {i} outside row of width {len(self.cols)}")
        a = self._new_arc()
        self.cols[i - 1:i - 1] = [a, a]
        return self

    def cap(self, i):
        if not (1 <= i <= len(self.cols) - 1):
            raise ValueError(f"cap at {i} outside row of width {len(self.cols)}")
        a, b = self.cols[i - 1], self.cols[i]
        del self.cols[i - 1:i + 1]
        if self._find(a) == self._find(b):
            if self._find(a) not in self.touched:
                self.free_loops += 1
        else:
            self._union(a, b)
        return self

    def cross(self, i, over):
        if not (1 <= i <= len(self.cols) - 1):
            raise ValueError(f"cross at {i} outside row of width {len(self.cols)}")
        if over not in ("L", "R"):
            raise ValueError("over must be 'L' or 'R'")
        a, b = self.cols[i - 1], self.cols[i]
        c, d = self._new_arc(), self._new_arc()
        for arc in (a, b, c, d):
            self._touch(arc)
        self.crossings.append(Crossing(nw=a, ne=b, sw=c, se=d,
                                       over="NWSE" if over == "L" else "NESW"))
        # strands swap: continuation of b (ne->sw) sits at column i,
        # continuation of a (nw->se) at column i+1
        self.cols[i - 1], self.cols[i] = c, d
        return self

    def run(self, events):
        for ev in events:
            if ev[0] == "cup":
                self.cup(ev[1])
            elif ev[0] == "cap":
                self.cap(ev[1])
            elif ev[0] == "x":
                self.cross(ev[1], ev[2])
            else:
                raise ValueError(f"unknown event {ev!r}")
        return self

    # -- finish ------------------------------------------------------------------

    def build(self):
        if self.cols:
            raise ValueError(f"{len(self.cols)} strands left open")
        # relabel merged arcs 1..m in order of first appearance
        relabel = {}

        def lab(a):
            r = self._find(a)
            if r not in relabel:
                relabel[r] = len(relabel) + 1
            return relabel[r]

        crossings = [
            Crossing(nw=lab(c.nw), ne=lab(c.ne), sw=lab(c.sw), se=lab(c.se), over=c.over)
            for c in self.crossings
        ]
        return PDCode(crossings, free_loops=self.free_loops)
