"""Parametric diagram builders.

All diagrams are produced through Morse event scripts (see morse.py).
Conventions, each pinned by a frozen test value:

  - a positive braid letter is a right-handed crossing, event ("x", i, "R"),
    so the writhe of a braid closure equals the word's exponent sum;
  - positive pretzel/twist parameters count right-handed half-twists.

The two closure-tangle templates splice a 3-braid box into a fixed tangle
with an encircling axis curve; the 0/1-resolutions and the crossing change
of the template's clasp reproduce, respectively, the braid closure, the
closure of the word times y^-1, and the 2-bridge plat closure, which is how
the transcription is validated.
"""

from __future__ import annotations

from .morse import MorseBuilder
from .. import braid3


def _splice(builder, word, x_col, reverse=False):
    """Emit a 3-braid word: x acts at (x_col, x_col+1), y one column right."""
    letters = list(word)
    if reverse:
        letters.reverse()
    for letter in letters:
        col = x_col if letter.gen == "x" else x_col + 1
        builder.cross(col, "R" if letter.sign > 0 else "L")


def braid_closure(word):
    """Trace closure of a 3-braid; components = cycles of its permutation."""
    b = MorseBuilder()
    b.cup(1).cup(2).cup(3)          # [r3, r2, r1, s1, s2, s3]
    _splice(b, word, 4)
    b.cap(3).cap(2).cap(1)
    return b.build()


def plat_closure(word):
    """Plat closure of a 3-braid: strands 2,3 capped top and bottom, strand 1
    closed around; always a 2-bridge link (or unlink)."""
    b = MorseBuilder()
    b.cup(1).cup(3)                 # [ret, s1, s2, s3]
    _splice(b, word, 2)
    b.cap(3).cap(1)
    return b.build()


def twist_knot(n):
    """The 2-bridge knot of fraction (2n+1)/n as the 4-plat of the word
    (sigma_2)^2 (sigma_1)^-(n-1) (sigma_2): n=1 trefoil, 2 figure-eight,
    3 -> 5_2, 4 -> 6_1; determinant 2n+1."""
    if n < 1:
        raise ValueError("twist knots need n >= 1")
    b = MorseBuilder()
    b.cup(1).cup(3)                 # [a, b, c, d]
    b.cross(2, "L").cross(2, "L")
    for _ in range(n - 1):
        b.cross(1, "R")
    b.cross(2, "L")
    b.cap(1).cap(1)
    return b.build()


def torus_2_bridge(k):
    """T(2,k) as the plat of |k| half-twists between the two bridges
    (positive k gives the positive torus link)."""
    b = MorseBuilder()
    b.cup(1).cup(3)
    for _ in range(abs(k)):
        b.cross(2, "R" if k > 0 else "L")
    b.cap(1).cap(1)
    return b.build()


def pretzel(p1, p2, p3):
    """Standard 3-tangle pretzel P(p1,p2,p3) with signed half-twist counts."""
    b = MorseBuilder()
    b.cup(1).cup(2).cup(4)          # [L1, R1, L2, R2, L3, R3]
    for col, t in ((1, p1), (3, p2), (5, p3)):
        for _ in range(abs(t)):
            b.cross(col, "R" if t > 0 else "L")
    b.cap(2).cap(2).cap(1)
    return b.build()


def whitehead_double_trefoil(clasp_sign, twists=2):
    """The twists-twisted Whitehead double of the right-handed trefoil.

    Blackboard 2-cable of the closed 2-braid (sigma_1)^3 (framing +3),
    corrected to the requested framing, with a signed clasp hooked into the
    cable's closure.
    """
    if clasp_sign not in (1, -1):
        raise ValueError("clasp_sign must be +1 or -1")
    b = MorseBuilder()
    b.cup(1).cup(2).cup(3).cup(4)   # [r4, r3, r2, r1, s1, s2, s3, s4]
    # doubled sigma_1: block transposition of strand pairs (1,2) and (3,4)
    for _ in range(3):
        for col in (6, 5, 7, 6):
            b.cross(col, "R")
    # framing correction: blackboard gives +3 full twists, want `twists`
    extra = twists - 3
    for _ in range(2 * abs(extra)):
        b.cross(5, "R" if extra > 0 else "L")
    # clasp between the cable pair and its return
    over = "L" if clasp_sign > 0 else "R"
    b.cross(4, over).cross(4, over)
    b.cap(5)                        # join s1, s2
    b.cap(3)                        # join r2, r1
    b.cap(2).cap(1)
    return b.build()


def _axis_events(b, left_col):
    """Thread an axis circle around the three strands at columns
    left_col..left_col+2: first sweep passes over, return sweep under."""
    b.cup(left_col)
    b.cross(left_col + 1, "L").cross(left_col + 2, "L").cross(left_col + 3, "L")
    b.cross(left_col, "R").cross(left_col + 1, "R").cross(left_col + 2, "R")
    b.cap(left_col + 3)


def tau_cable_unknot(word, axis=True, clasp="LL"):
    """The first closure-tangle template: the spliced union of the tangle and
    a 3-braid, together with the encircling axis curve when axis=True.

    clasp selects the over-strands of the template's two hook crossings
    ("LL" is the transcribed diagram; "RL"/"0"/"1" give the crossing-changed
    and resolved variants used by the validation oracles).
    """
    b = MorseBuilder()
    b.cup(1).cup(2).cup(3)          # [Bh, Oh, Th, Tl, Ol, Bl]
    if axis:
        _axis_events(b, 4)
    _splice(b, word, 4, reverse=True)
    b.cup(2)                        # [Bh, Ah, Al, Oh, Th, b1, b2, b3]
    if clasp == "LL":
        b.cross(1, "L").cross(3, "L")
    elif clasp == "RL":             # hook crossing changed: 2-bridge plat
        b.cross(1, "R").cross(3, "L")
    elif clasp == "0":              # trace-closure resolution of the hook
        b.cross(3, "L")
    elif clasp == "1":              # the other resolution: closure of (word)y^-1
        b.cap(1).cup(1)
        b.cross(3, "L")
    else:
        raise ValueError(f"unknown clasp variant {clasp!r}")
    b.cap(2)                        # capB tip
    b.cap(3)                        # strand-1 closure loop
    b.cap(2).cap(1)                 # capA minima
    return b.build()


def tau_cable_trefoil(word, axis=True):
    """The second closure-tangle template (the cabled-trefoil case)."""
    b = MorseBuilder()
    b.cup(1)                        # [WBh, WBl]
    b.cup(3)                        # [WBh, WBl, WOh, WOl]
    b.cup(2)                        # [WBh, VTh, VTl, WBl, WOh, WOl]
    if axis:
        _axis_events(b, 3)
    b.cup(1)                        # [OCb, M1b, WBh, VTh, VTl, WBl, WOh, WOl]
    b.cross(2, "R")                 # M1 x M2, right strand over
    _splice(b, word, 5, reverse=True)
    b.cap(4)                        # (VTh, l1)
    b.cap(3)                        # (M1b, l2)
    b.cup(3)                        # [OCb, WBh, S2b, C1b, H, WOl]
    b.cross(4, "L")                 # C1 over H
    b.cross(2, "L")                 # S3 over S2
    b.cup(4)                        # [OCb, S2b, WBh, S1b, C2b, H, C1b, WOl]
    b.cross(5, "L")                 # C2 over H
    b.cross(1, "L")                 # S4 over S2
    b.cross(3, "L")                 # S3 over S1
    b.cross(6, "L")                 # C2 over C1
    b.cross(2, "L")                 # S4 over S1
    b.cross(5, "L")                 # H over C1
    b.cap(4)                        # (S3b, C1b)
    b.cross(4, "L")                 # H over C2
    b.cap(3)                        # (S4b, C2b)
    b.cap(2)                        # (S1b, H)
    b.cap(1)                        # (S2b, WOl)
    return b.build()
