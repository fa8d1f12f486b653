"""Dehn-surgery arithmetic on unknots and torus knots.

Implements the lens-space and reducible surgeries on T(p,q):

    S^3_{pq+-1}(T_{p,q})     = S^3_{(pq+-1)/q^2}(U)
    S^3_{pq}(T_{p,q})        = S^3_{p/q}(U) # S^3_{q/p}(U)
    S^3_{(2pq+-1)/2}(T_{p,q}) = S^3_{(2pq+-1)/(2q^2)}(U)

together with the slope bookkeeping that links a crossing change to a
half-integral surgery and its two resolutions to the neighbouring integral
surgeries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lens import (
    S3,
    S1XS2,
    ClosedManifold,
    Slope,
    connsum,
    reverse_orientation,
    surgery_on_unknot,
)


@dataclass(frozen=True)
class TorusKnot:
    """T(p,q) with q > 0 and gcd(p,q)=1; negative p is the mirror."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if q < 0:
            p, q = -p, -q
        if math.gcd(p, q) != 1:
            raise ValueError(f"T({p},{q}) needs coprime parameters")
        if abs(p) < 2 or q < 2:
            raise ValueError(f"T({p},{q}) is not a nontrivial torus knot")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def mirror(self):
        return TorusKnot(-self.p, self.q)

    def is_positive(self):
        return self.p > 0

    def __str__(self):
        return f"T({self.p},{self.q})"


UNKNOT = "unknot"


@dataclass(frozen=True)
class MontesinosTriple:
    """The half-integral slope of a crossing change and its two resolutions."""

    n: int

    @property
    def half(self):
        return Slope(2 * self.n + 1, 2)

    @property
    def zero_res(self):
        return Slope(self.n, 1)

    @property
    def one_res(self):
        return Slope(self.n + 1, 1)


def montesinos_triple(n):
    return MontesinosTriple(n)


NOT_LENS_CLASSIFIED = "not-lens-classified"


def moser(k, r):
    """Surgery on a torus knot at the slopes classified as (sums of) lens spaces.

    Slopes pq-1, pq, pq+1 and (2pq+-1)/2 are recognized; anything else
    returns the NOT_LENS_CLASSIFIED marker.  Negative companions are handled
    by mirroring and reversing orientation.
    """
    if not isinstance(r, Slope):
        r = Slope.from_fraction(Fraction(r))
    if k == UNKNOT:
        return surgery_on_unknot(r)
    if k.p < 0:
        # S^3_r(mirror K) = -S^3_{-r}(K)
        inner = moser(k.mirror(), -r)
        if inner == NOT_LENS_CLASSIFIED:
            return inner
        return reverse_orientation(inner)
    p, q = k.p, k.q
    pq = p * q
    if r.q == 1:
        n = r.p
        if n == pq - 1 or n == pq + 1:
            return surgery_on_unknot(Slope(n, q * q))
        if n == pq:
            return connsum([surgery_on_unknot(Slope(p, q)), surgery_on_unknot(Slope(q, p))])
        return NOT_LENS_CLASSIFIED
    if r.q == 2 and abs(2 * pq - r.p) == 1:
        # denominator 2p^2 (the paper's representative; 2q^2 gives the
        # oriented-homeomorphic inverse form)
        return surgery_on_unknot(Slope(r.p, 2 * p * p))
    return NOT_LENS_CLASSIFIED


def mirror_surgery(k, r):
    """The mirrored problem: (K, r) -> (mirror K, -r), with orientation-reversed
    result; applying it twice is the identity."""
    if not isinstance(r, Slope):
        r = Slope.from_fraction(Fraction(r))
    mk = UNKNOT if k == UNKNOT else k.mirror()
    return mk, -r


def half_integral_lens_constraint(k):
    """The only n for which (2n+1)/2 surgery on T(p,q) can be a lens space:
    slopes pq +- 1/2, i.e. n in {pq-1, pq}."""
    if k == UNKNOT:
        raise ValueError("constraint applies to nontrivial torus knots")
    pq = k.p * k.q
    return {pq - 1, pq}
