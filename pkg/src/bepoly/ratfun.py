"""Quotients of polynomials, compared by cross-multiplication.

No polynomial gcd is ever taken.  A RatFun is normalized only by rational
content: the denominator is scaled to integer content 1 with a positive
leading coefficient, and the numerator is scaled by the same factor.
"""

from fractions import Fraction

from .arith import as_rational, format_rational
from .errors import PoleError
from .poly import ONE, MultiPoly, as_poly, _check_var


class RatFun:
    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None):
        num = as_poly(num)
        den = ONE if den is None else as_poly(den)
        if den.is_zero():
            raise PoleError("rational function with zero denominator")
        if num.is_zero():
            den = ONE
        elif den is not ONE:
            factor = den.content()
            if den.leading_coefficient() < 0:
                factor = -factor
            if factor != 1:
                num = num.scale(1 / factor)
                den = den.scale(1 / factor)
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (MultiPoly, int, Fraction)):
            return RatFun(other)
        return None

    def is_polynomial(self):
        """True when the denominator is a constant (after normalization, 1)."""
        return self.den.is_constant()

    def to_poly(self):
        if not self.is_polynomial():
            raise ValueError("%s is not a polynomial" % self)
        return self.num.scale(1 / self.den.constant_value())

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def variables(self):
        seen = set(self.num.variables()) | set(self.den.variables())
        return tuple(v for v in ("x", "y", "r", "s", "t", "a") if v in seen)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        if o.den.is_constant():
            return RatFun(self.num + o.num * self.den / o.den.constant_value(), self.den)
        if self.den.is_constant():
            return RatFun(self.num * o.den / self.den.constant_value() + o.num, o.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFun(self.num.scale(other), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.num and not o.num.is_zero():
            return RatFun(self.num, o.den)
        if o.den == self.num and not self.num.is_zero():
            return RatFun(o.num, self.den)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise PoleError("division by zero")
            return RatFun(self.num.scale(1 / Fraction(other)), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise PoleError("division by the zero rational function")
        return self * RatFun(o.den, o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("rational function powers need a nonnegative integer exponent")
        return RatFun(self.num ** n, self.den ** n)

    def cross_difference(self, other):
        """num(self)*den(other) - num(other)*den(self)."""
        o = self._coerce(other)
        return self.num * o.den - o.num * self.den

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.cross_difference(o).is_zero()

    # -- evaluation ---------------------------------------------------
    def substitute(self, var, replacement):
        return RatFun(self.num.substitute(var, replacement), self.den.substitute(var, replacement))

    def evaluate(self, assignment):
        den = self.den.evaluate(assignment)
        if den.is_zero():
            raise PoleError("denominator vanishes at %s" % _fmt_assignment(assignment))
        return RatFun(self.num.evaluate(assignment), den)

    def value(self, assignment=None):
        """Fully evaluate to a Fraction."""
        return self.evaluate(assignment or {}).constant_value()

    def limit_at(self, var, c):
        return limit_at(self, var, c)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFun(%s)" % self


def _fmt_assignment(assignment):
    return ", ".join("%s=%s" % (v, format_rational(q)) for v, q in sorted(assignment.items()))


def divide_linear(p, var, c):
    """Synthetic division of ``p`` by ``(var - c)`` viewing ``p`` as univariate in ``var``.

    Returns ``(quotient, remainder)``; the remainder equals ``p`` at ``var = c``
    and is free of ``var``.
    """
    _check_var(var)
    c = as_rational(c)
    coeffs = p.coefficients_in(var)
    if len(coeffs) == 1:
        return MultiPoly(), coeffs[0]
    # Horner: b_{d-1} = a_d, b_{i-1} = a_i + c*b_i; remainder a_0 + c*b_0
    quotient = [None] * (len(coeffs) - 1)
    carry = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        quotient[i] = carry
        carry = coeffs[i] + carry.scale(c)
    return MultiPoly.from_coefficients(var, quotient), carry


def limit_at(f, var, c):
    """Limit of the rational function ``f`` as ``var -> c``.

    Common factors (var - c) are stripped from numerator and denominator by
    repeated synthetic division, then the reduced quotient is evaluated at
    ``var = c``.  Raises PoleError when the reduced denominator vanishes there.
    """
    if not isinstance(f, RatFun):
        f = RatFun(f)
    c = as_rational(c)
    num, den = f.num, f.den
    while True:
        if num.is_zero():
            return RatFun(0)
        qn, rn = divide_linear(num, var, c)
        qd, rd = divide_linear(den, var, c)
        if not rd.is_zero():
            return RatFun(rn, rd)
        if not rn.is_zero():
            raise PoleError("limit %s -> %s is infinite: denominator vanishes, numerator does not"
                            % (var, format_rational(c)))
        num, den = qn, qd
