"""Exact Laurent polynomials with big-integer coefficients.

Two small value types cover every polynomial this package produces:

* ``LaurentPoly``: one variable, integer exponents. The variable is a tag
  ("A", "q", "t", ...) and arithmetic between different tags is refused.
  For the variable "t" the exponents are stored in quarter units (the
  substitution A -> t^(-1/4) only produces quarter powers), and rendering
  divides by four.
* ``Poly2``: two variables (t, q), used for the Poincare polynomial of a
  bigraded homology.

Coefficient maps never store zeros, so equality is plain dict equality.
"""

from __future__ import annotations

from math import gcd

__all__ = ["LaurentPoly", "Poly2"]


class LaurentPoly:
    """Laurent polynomial c_e * var^e with exact integer coefficients.

    ``exponent_unit`` is a display denominator: a stored exponent e renders
    as var^(e/exponent_unit). All arithmetic is on stored exponents, so
    polynomials only combine when both tag and unit agree.
    """

    __slots__ = ("var", "unit", "coeffs")

    def __init__(self, var, coeffs=None, unit=1):
        self.var = var
        self.unit = unit
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[e] = c

    @classmethod
    def zero(cls, var, unit=1):
        return cls(var, {}, unit)

    @classmethod
    def constant(cls, var, c, unit=1):
        return cls(var, {0: c}, unit)

    @classmethod
    def monomial(cls, var, e, c=1, unit=1):
        return cls(var, {e: c}, unit)

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        """Yield (exponent, coefficient) in ascending exponent order."""
        for e in sorted(self.coeffs):
            yield e, self.coeffs[e]

    def _check(self, other):
        if self.var != other.var or self.unit != other.unit:
            raise ValueError(
                "cannot combine %r and %r polynomials" % (self.var, other.var)
            )

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.var == other.var
            and self.unit == other.unit
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.unit, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.var, out, self.unit)

    def __neg__(self):
        return LaurentPoly(
            self.var, {e: -c for e, c in self.coeffs.items()}, self.unit
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(
                self.var, {e: c * other for e, c in self.coeffs.items()}, self.unit
            )
        self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.var, out, self.unit)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = LaurentPoly.constant(self.var, 1, self.unit)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by var^k."""
        return LaurentPoly(
            self.var, {e + k: c for e, c in self.coeffs.items()}, self.unit
        )

    def divexact(self, other):
        """Exact division; raises ValueError when the remainder is nonzero."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.coeffs)
        quo = {}
        lead = max(other.coeffs)
        lead_c = other.coeffs[lead]
        # exact quotients live between these exponents; in a Laurent ring the
        # cancellation loop would otherwise walk down forever on bad input
        qmin = (min(self.coeffs) - min(other.coeffs)) if self.coeffs else 0
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c or e - lead < qmin:
                raise ValueError("inexact polynomial division")
            qe, qc = e - lead, c // lead_c
            quo[qe] = qc
            for oe, oc in other.coeffs.items():
                t = oe + qe
                s = rem.get(t, 0) - oc * qc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return LaurentPoly(self.var, quo, self.unit)

    def evaluate_at_one(self):
        return sum(self.coeffs.values())

    def _render_exponent(self, e):
        if self.unit == 1:
            return str(e)
        g = gcd(abs(e), self.unit)
        num, den = e // g, self.unit // g
        if den == 1:
            return str(num)
        return "%d/%d" % (num, den)

    def render(self):
        """Terms in ascending exponent order, e.g. "q^-1 + q"."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                if e == self.unit:
                    body = mag + self.var
                else:
                    body = mag + "%s^%s" % (self.var, self._render_exponent(e))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


class Poly2:
    """Polynomial in (t, q) with integer exponents, used for Poincare data."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    self.coeffs[k] = c

    def add_term(self, i, j, c):
        out = dict(self.coeffs)
        s = out.get((i, j), 0) + c
        if s:
            out[(i, j)] = s
        else:
            out.pop((i, j), None)
        return Poly2(out)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def at_t_minus_one(self):
        """Substitute t = -1, returning a LaurentPoly in q."""
        out = {}
        for (i, j), c in self.coeffs.items():
            s = out.get(j, 0) + c * (-1) ** (i % 2)
            if s:
                out[j] = s
            else:
                out.pop(j, None)
        return LaurentPoly("q", out)

    @staticmethod
    def _mono(i, j):
        factors = []
        if i == 1:
            factors.append("t")
        elif i != 0:
            factors.append("t^%d" % i)
        if j == 1:
            factors.append("q")
        elif j != 0:
            factors.append("q^%d" % j)
        return " ".join(factors)

    def render(self):
        """Terms ordered by (t-exponent, q-exponent), e.g. "q^-1 + q"."""
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = self._mono(i, j)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Poly2(%s)" % self.render()
