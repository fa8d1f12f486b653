"""Integer 2x2 matrix arithmetic and reconstruction of 3-braid words from
determinant-1 matrices (inverting the braid representation up to its kernel).

The factorization walks a Euclidean reduction: right-multiplying by
[[1,a],[0,1]] (the image of x^a) and [[1,0],[b,1]] (the image of y^-b)
shrinks the bottom row, terminating at plus/minus the identity, and a final
full twist squared fixes the sign.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other):
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse_unimodular(self):
        if self.det() != 1:
            raise ValueError("inverse_unimodular needs det 1")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Mat2[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENT = Mat2(1, 0, 0, 1)


def mul(m, n):
    return m * n


def det(m):
    return m.det()


def trace(m):
    return m.trace()


def neg(m):
    return -m


def matrix_to_word(m):
    """A braid word w with rho(w) = m, unique up to powers of Delta^4.

    Requires det(m) = 1.  Euclidean reduction on the bottom row with
    minimal-magnitude quotients keeps the output canonical; the sign is fixed
    by at most one Delta^2 factor (rho(Delta^2) = -I).
    """
    from . import braid3

    if m.det() != 1:
        raise ValueError(f"matrix_to_word needs det 1, got {m.det()}")

    # Peel generators off the left: cur <- rho(g)^-1 * cur.
    #   rho(x^q)^-1 * [[a,b],[c,d]] = [[a-qc, b-qd],[c,d]]
    #   rho(y^q)^-1 * [[a,b],[c,d]] = [[a,b],[c+qa, d+qb]]
    ops = []
    cur = m
    while cur.c != 0:
        if cur.a == 0:
            q = -cur.c  # c = ±1 here since det = -bc = 1
            ops.append(("x", q))
            cur = Mat2(cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d)
        elif abs(cur.c) >= abs(cur.a):
            q = -_round_div(cur.c, cur.a)
            ops.append(("y", q))
            cur = Mat2(cur.a, cur.b, cur.c + q * cur.a, cur.d + q * cur.b)
        else:
            q = _round_div(cur.a, cur.c)
            ops.append(("x", q))
            cur = Mat2(cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d)
    if cur.a == -1:
        ops.append(("delta2", 0))
        cur = -cur
    if cur.b != 0:
        ops.append(("x", cur.b))

    out = braid3.BraidWord()
    for kind, q in ops:
        if kind == "delta2":
            piece = braid3.delta_power(2)
        else:
            piece = braid3.power(braid3.word(kind), q)
        out = braid3.concat(out, piece)
    return out


def _round_div(a, b):
    """Quotient of a/b rounded to nearest (ties toward zero magnitude)."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q
