"""Words in the 3-strand braid group and the homomorphism rho: B_3 -> SL(2,Z).

Generators are x (positive crossing of the top two strands) and y (positive
crossing of the bottom two strands), written textually as ``x X y Y`` with
uppercase meaning inverse.  Words are kept freely reduced at all times, and
equality of group elements is decided via the pair (rho-image, exponent sum),
which is faithful because ker(rho) is generated by the full twist squared.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .sl2z import Mat2, IDENT

GENERATORS = ("x", "y")


@dataclass(frozen=True)
class Letter:
    gen: str
    sign: int

    def __post_init__(self):
        if self.gen not in GENERATORS or self.sign not in (1, -1):
            raise ValueError(f"bad letter ({self.gen}, {self.sign})")

    def inverse(self):
        return Letter(self.gen, -self.sign)

    @property
    def char(self):
        return self.gen if self.sign == 1 else self.gen.upper()

    @classmethod
    def from_char(cls, ch):
        low = ch.lower()
        if low not in GENERATORS:
            raise ValueError(f"bad letter character {ch!r}")
        return cls(low, 1 if ch.islower() else -1)


X = Letter("x", 1)
XINV = Letter("x", -1)
Y = Letter("y", 1)
YINV = Letter("y", -1)

RHO_X = Mat2(1, 1, 0, 1)
RHO_Y = Mat2(1, 0, -1, 1)


class BraidWord:
    """A freely reduced word in x, y and their inverses."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        if isinstance(letters, str):
            letters = [Letter.from_char(c) for c in letters]
        self.letters = _reduce_letters(letters)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, BraidWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"BraidWord({str(self)!r})"

    def __str__(self):
        return "".join(l.char for l in self.letters) or "1"

    def __mul__(self, other):
        return concat(self, other)


def _reduce_letters(letters):
    out = []
    for l in letters:
        if out and out[-1].gen == l.gen and out[-1].sign == -l.sign:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def word(text):
    """Parse the grammar [xXyY]* ('1' or '' mean the empty word)."""
    if text in ("", "1"):
        return BraidWord()
    return BraidWord(text)


def reduce(letters):
    """Free reduction of a raw letter sequence; idempotent."""
    return BraidWord(tuple(letters))


def concat(u, v):
    return BraidWord(u.letters + v.letters)


def inverse(w):
    return BraidWord(tuple(l.inverse() for l in reversed(w.letters)))


def reverse(w):
    """The word reversal r(g_1...g_n) = g_n...g_1, an anti-automorphism."""
    return BraidWord(tuple(reversed(w.letters)))


def mirror(w):
    """Letterwise inversion m(g_1...g_n) = g_1^-1...g_n^-1.

    Satisfies mirror(w) == reverse(inverse(w)).
    """
    return BraidWord(tuple(l.inverse() for l in w.letters))


def conjugate_by_y(w, a):
    """reduce(y^a w y^-a)."""
    ys = tuple([Y] * a) if a >= 0 else tuple([YINV] * (-a))
    ys_inv = tuple(l.inverse() for l in reversed(ys))
    return BraidWord(ys + w.letters + ys_inv)


def power(w, k):
    if k < 0:
        return power(inverse(w), -k)
    out = BraidWord()
    for _ in range(k):
        out = concat(out, w)
    return out


DELTA = word("xyx")


def delta_power(k):
    """Delta^k where Delta = xyx; Delta^2 generates the center."""
    return power(DELTA, k)


def exponent_sum(w):
    """Sum of letter signs; invariant under conjugation and free reduction."""
    return sum(l.sign for l in w.letters)


@lru_cache(maxsize=None)
def _rho_letters(letters):
    m = IDENT
    for l in letters:
        gen = RHO_X if l.gen == "x" else RHO_Y
        if l.sign < 0:
            gen = gen.inverse_unimodular()
        m = m * gen
    return m


def rho(w):
    """The representation with rho(x) = [[1,1],[0,1]], rho(y) = [[1,0],[-1,1]].

    rho(xyx) = rho(yxy) = [[0,1],[-1,0]] and rho(Delta^2) = -I.
    """
    return _rho_letters(w.letters)


def kernel_power(w):
    """If rho(w) = I, the integer d with w = Delta^(4d); otherwise None."""
    if rho(w) != IDENT:
        return None
    e = exponent_sum(w)
    assert e % 12 == 0, f"rho(w)=I with exponent sum {e} not divisible by 12"
    return e // 12


def braids_equal(u, v):
    """Equality in B_3, via rho-image plus exponent sum."""
    return exponent_sum(u) == exponent_sum(v) and rho(u) == rho(v)


def random_word(rng, max_len=20):
    """Uniform random reduced-ish word, for property sweeps."""
    n = rng.randint(0, max_len)
    alphabet = (X, XINV, Y, YINV)
    return BraidWord(tuple(rng.choice(alphabet) for _ in range(n)))
