"""Lens-space normal forms, homeomorphism tests, modular inverses, and the
Murasugi braid-index criterion for 2-bridge links.

L(p,q) is stored with p > 1 and 0 < q < p; orientation reversal is the
rewrite -L(p,q) = L(p, p-q), applied before any comparison.  S^3_{r/s}(U)
denotes r/s surgery on the unknot, so L(p,q) = S^3_{p/q}(U).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Slope:
    """A surgery slope p/q in lowest terms with q >= 0; 1/0 is allowed."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if q == 0:
            if p == 0:
                raise ValueError("slope 0/0")
            object.__setattr__(self, "p", 1)
            return
        if q < 0:
            p, q = -p, -q
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def from_fraction(cls, f):
        if isinstance(f, int):
            return cls(f, 1)
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    def as_fraction(self):
        if self.q == 0:
            raise ZeroDivisionError("slope 1/0")
        return Fraction(self.p, self.q)

    def __neg__(self):
        return Slope(-self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ClosedManifold:
    """S3, S1xS2, a lens space, or a connected sum of lens spaces."""

    kind: str                      # "S3" | "S1xS2" | "lens" | "connsum"
    p: int = 0
    q: int = 0
    parts: tuple = ()

    def __str__(self):
        if self.kind == "S3":
            return "S3"
        if self.kind == "S1xS2":
            return "S1xS2"
        if self.kind == "lens":
            return f"L({self.p},{self.q})"
        return " # ".join(str(x) for x in self.parts)


S3 = ClosedManifold("S3")
S1XS2 = ClosedManifold("S1xS2")


def lens(p, q):
    """Normalized lens space; collapses to S3 / S1xS2 when |p| <= 1."""
    if p < 0:
        p, q = -p, -q
    if p == 0:
        return S1XS2
    if p == 1:
        return S3
    q %= p
    if q == 0 or math.gcd(p, q) != 1:
        raise ValueError(f"L({p},{q}) needs gcd(p,q)=1 with q nonzero mod p")
    return ClosedManifold("lens", p=p, q=q)


def connsum(parts):
    parts = [x for x in parts if x.kind != "S3"]
    if not parts:
        return S3
    if len(parts) == 1:
        return parts[0]
    key = lambda m: (m.p, m.q)
    return ClosedManifold("connsum", parts=tuple(sorted(parts, key=key)))


def reverse_orientation(m):
    """-L(p,q) = L(p, p-q); S3 and S1xS2 are amphichiral."""
    if m.kind == "lens":
        return lens(m.p, m.p - m.q)
    if m.kind == "connsum":
        return connsum([reverse_orientation(x) for x in m.parts])
    return m


def surgery_on_unknot(r):
    """S^3_{p/q}(U) as a closed manifold."""
    if not isinstance(r, Slope):
        r = Slope.from_fraction(r)
    if r.q == 0:
        return S3
    if r.p == 0:
        return S1XS2
    if abs(r.p) == 1:
        return S3
    return lens(r.p, r.q)


def mod_inverse(q, p):
    """(qbar, r) with 0 <= qbar < p and q*qbar = r*p + 1; needs gcd(p,q)=1."""
    if p < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1")
    if p == 1:
        return 0, -1  # everything is 0 mod 1; q*0 = (-1)*1 + 1
    qbar = pow(q % p, -1, p)
    r = (q * qbar - 1) // p
    return qbar, r


def homeomorphic(m, n, oriented=True):
    """Lens-space classification: L(p,q) = L(p,q') iff q' = q^(+-1) mod p;
    unoriented comparison also allows q' = -q^(+-1) mod p."""
    if m.kind != n.kind:
        if {m.kind, n.kind} <= {"lens", "connsum"}:
            return False
        return False
    if m.kind in ("S3", "S1xS2"):
        return True
    if m.kind == "lens":
        if m.p != n.p:
            return False
        p = m.p
        images = {m.q % p, pow(m.q, -1, p)}
        if not oriented:
            images |= {(-x) % p for x in set(images)}
        return n.q % p in images
    if len(m.parts) != len(n.parts):
        return False
    # connected sums of lens spaces: match summands greedily (multiset)
    remaining = list(n.parts)
    for part in m.parts:
        for i, other in enumerate(remaining):
            if homeomorphic(part, other, oriented):
                remaining.pop(i)
                break
        else:
            return False
    return True


def h1_order(m):
    """|H_1|, with 0 meaning infinite."""
    if m.kind == "S3":
        return 1
    if m.kind == "S1xS2":
        return 0
    if m.kind == "lens":
        return m.p
    total = 1
    for part in m.parts:
        o = h1_order(part)
        if o == 0:
            return 0
        total *= o
    return total


def murasugi_braid_index(r, s):
    """Braid index of the 2-bridge link L_{r/s} (0 < s < r, s odd): 2, 3, or 'more'.

    Index 2 iff s = 1; index 3 iff (r,s) = (2cd+3c+3d+4, 2c+3) or
    (2cd+c+d+1, 2c+1) for some integers c,d > 0.
    """
    _check_two_bridge(r, s)
    if s == 1:
        return 2
    # family 1: s = 2c+3 determines c; then r = 2cd+3c+3d+4 solves for d
    if s >= 5:
        c = (s - 3) // 2
        num = r - 3 * c - 4
        den = 2 * c + 3
        if num > 0 and num % den == 0:
            return 3
    # family 2: s = 2c+1
    c = (s - 1) // 2
    if c > 0:
        num = r - c - 1
        den = 2 * c + 1
        if num > 0 and num % den == 0:
            return 3
    return "more"


def murasugi_divisibility(r, s):
    """Necessary condition for braid index <= 3: s divides 2r+1 or 2r-1."""
    _check_two_bridge(r, s)
    return (2 * r + 1) % s == 0 or (2 * r - 1) % s == 0


def _check_two_bridge(r, s):
    if not (0 < s < r):
        raise ValueError(f"need 0 < s < r, got ({r},{s})")
    if s % 2 == 0:
        raise ValueError(f"s must be odd, got ({r},{s})")


def two_bridge_representatives(p, q):
    """All odd s in (0,p) with L(p,s) unoriented-homeomorphic to L(p,q).

    The 2-bridge link of a lens space is defined up to this equivalence
    (s ~ s^(+-1), and mirrors s ~ -s^(+-1) mod p).
    """
    q %= p
    reps = {q, pow(q, -1, p)}
    reps |= {(p - x) % p for x in set(reps)}
    return sorted(s for s in reps if 0 < s < p and s % 2 == 1)


def braid_index_le3_up_to_equivalence(p, q):
    """Does the 2-bridge link of L(p,q) have braid index <= 3?

    Closed over the unoriented equivalence: tries every odd representative.
    """
    for s in two_bridge_representatives(p, q):
        if murasugi_braid_index(p, s) in (2, 3):
            return True
    return False


def divisibility_le3_up_to_equivalence(p, q):
    """Necessary condition for braid index <= 3, closed over the unoriented
    2-bridge equivalence: some odd representative s divides 2p+1 or 2p-1."""
    return any(murasugi_divisibility(p, s) for s in two_bridge_representatives(p, q))
