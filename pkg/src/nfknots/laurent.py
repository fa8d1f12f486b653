"""Exact integer-coefficient Laurent polynomials in one or two variables.

Half-integer exponents (t^(1/2), A^(1/4)) are handled by callers scaling
exponents: e.g. the Jones polynomial is stored in u = t^(1/2), so the
monomial t^k carries exponent 2k.  No zero coefficients are ever stored,
and the canonical text form sorts terms by exponent, which makes string
equality usable in certificates.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Laurent polynomial with int coefficients, keyed by exponent tuples."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars=1, coeffs=None):
        self.nvars = nvars
        self.coeffs = {}
        if coeffs:
            for exp, c in coeffs.items():
                if isinstance(exp, int):
                    exp = (exp,)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has wrong arity for {nvars} vars")
                if c:
                    self.coeffs[tuple(exp)] = self.coeffs.get(tuple(exp), 0) + c
            self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars=1):
        return cls(nvars)

    @classmethod
    def one(cls, nvars=1):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        if isinstance(exp, int):
            exp = (exp,)
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def var(cls, power=1, nvars=1, index=0):
        exp = [0] * nvars
        exp[index] = power
        return cls(nvars, {tuple(exp): 1})

    # -- ring ops ----------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(self.nvars, {(0,) * self.nvars: other})
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(self.nvars, {(0,) * self.nvars: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("can only invert monomials")
            ((e, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("can only invert unit monomials")
            base = LaurentPoly(self.nvars, {tuple(-x for x in e): c})
            return base ** (-n)
        out = LaurentPoly.one(self.nvars)
        p = self
        while n:
            if n & 1:
                out = out * p
            p = p * p
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return self.coeffs == {(0,) * self.nvars: other}
        return isinstance(other, LaurentPoly) and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def exponent_range(self, index=0):
        """(min, max) exponent in the given variable; (0, 0) for zero."""
        if not self.coeffs:
            return (0, 0)
        exps = [e[index] for e in self.coeffs]
        return (min(exps), max(exps))

    def coefficient(self, exp):
        if isinstance(exp, int):
            exp = (exp,)
        return self.coeffs.get(tuple(exp), 0)

    # -- transforms --------------------------------------------------------

    def shift(self, by, index=0):
        """Multiply by var^by."""
        out = {}
        for e, c in self.coeffs.items():
            e = list(e)
            e[index] += by
            out[tuple(e)] = c
        return LaurentPoly(self.nvars, out)

    def invert_variable(self, index=0):
        """Substitute var -> var^(-1)."""
        out = {}
        for e, c in self.coeffs.items():
            e = list(e)
            e[index] = -e[index]
            out[tuple(e)] = c
        return LaurentPoly(self.nvars, out)

    def scale_exponents(self, factor, index=0):
        """Substitute var -> var^factor; exponents must stay integral for factor<1."""
        out = {}
        for e, c in self.coeffs.items():
            e = list(e)
            scaled = Fraction(e[index]) * Fraction(factor)
            if scaled.denominator != 1:
                raise ValueError(f"exponent {e[index]} not divisible for scaling by {factor}")
            e[index] = int(scaled)
            out[tuple(e)] = c
        return LaurentPoly(self.nvars, out)

    def substitute(self, index, value):
        """Substitute a LaurentPoly (in the remaining variable layout) for one variable.

        For a 2-variable poly, substituting index 0 with a 1-variable poly in the
        surviving variable returns a 1-variable poly.
        """
        if self.nvars == 1:
            out = LaurentPoly(value.nvars)
            for (e,), c in self.coeffs.items():
                out = out + (value ** e) * c
            return out
        if self.nvars != 2:
            raise ValueError("substitute supports 1 or 2 variables")
        keep = 1 - index
        out = LaurentPoly(value.nvars)
        for e, c in self.coeffs.items():
            term = (value ** e[index]) * c
            out = out + term.shift(e[keep])
        return out

    def evaluate_gaussian(self, re, im, index=0):
        """Evaluate a 1-variable poly at the Gaussian integer re + im*i.

        Returns (real, imag) as exact ints; negative exponents require the
        value to be a unit (1, -1, i, -i).
        """
        if self.nvars != 1:
            raise ValueError("gaussian evaluation is 1-variable only")
        total_re, total_im = 0, 0
        for (e,), c in self.coeffs.items():
            pr, pi = 1, 0
            n = e
            if n < 0:
                # unit check: z^-1 = conj(z) for |z| = 1
                if re * re + im * im != 1:
                    raise ValueError("negative exponent at non-unit point")
                n = -n
                br, bi = re, -im
            else:
                br, bi = re, im
            for _ in range(n):
                pr, pi = pr * br - pi * bi, pr * bi + pi * br
            total_re += c * pr
            total_im += c * pi
        return total_re, total_im

    def evaluate_int(self, x, index=0):
        """Evaluate at an integer or Fraction point (1-variable)."""
        if self.nvars != 1:
            raise ValueError("evaluate_int is 1-variable only")
        total = Fraction(0)
        for (e,), c in self.coeffs.items():
            total += Fraction(c) * (Fraction(x) ** e)
        return total

    # -- canonical text ----------------------------------------------------

    def canonical(self):
        """Sorted 'exp:coeff' pairs, the certificate serialization."""
        items = sorted(self.coeffs.items())
        return ";".join(",".join(map(str, e)) + ":" + str(c) for e, c in items) or "0"

    @classmethod
    def from_canonical(cls, text, nvars=1):
        if text == "0":
            return cls(nvars)
        out = {}
        for part in text.split(";"):
            es, c = part.rsplit(":", 1)
            exp = tuple(int(x) for x in es.split(","))
            out[exp] = int(c)
        return cls(nvars, out)

    def pretty(self, names=("t",)):
        """Human form like '2t - 3 + 2t^-1' (exponents taken literally)."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mono = []
            for name, k in zip(names, e):
                if k == 1:
                    mono.append(name)
                elif k != 0:
                    mono.append(f"{name}^{k}")
            m = "*".join(mono)
            if not m:
                term = str(abs(c))
            elif abs(c) == 1:
                term = m
            else:
                term = f"{abs(c)}*{m}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self.canonical()!r})"
