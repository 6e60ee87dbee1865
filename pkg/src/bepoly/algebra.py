"""Evaluation backends shared by the identity builders and the DSL.

A builder is written once against the small interface below and run under
one of three algebras:

* :class:`SymbolicAlgebra` produces MultiPoly / RatFun values (exact proof);
* :class:`NumericAlgebra` produces Fractions at one sample point;
* :class:`DegreeAlgebra` produces per-variable degree bounds, used to size
  the sample grid so that a fully vanishing grid is itself a proof.

Interface: ``var(name)``, ``B(k, arg)``, ``E(k, arg)``, ``binom(arg, k)``,
``bnum(k)``, ``enum(k)``, ``harmonic(n)``, ``sum(iterable)``,
``poly(coeffs, arg, key)`` and ``limit(fn, var, c)``.  Elements support
``+ - * /`` with each other and with ints/Fractions, and ``**`` by a
nonnegative int.
"""

from fractions import Fraction
from functools import lru_cache

from .arith import binom_rational, harmonic
from .errors import PoleError
from .poly import VARIABLES, MultiPoly, binom_poly
from .ratfun import RatFun, limit_at
from .sequences import default_cache

_SCALARS = (int, Fraction)


def _horner(coeffs, value):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


class SymbolicAlgebra:
    """Exact polynomial algebra; ``values`` pins some variables to numbers."""

    def __init__(self, values=None, cache=None):
        self.values = {v: Fraction(q) for v, q in (values or {}).items()}
        self.seq = cache or default_cache()
        self._memo = {}

    def var(self, name):
        if name in self.values:
            return self.values[name]
        return MultiPoly.var(name)

    def poly(self, coeffs, arg, key=None):
        if isinstance(arg, _SCALARS):
            return _horner(coeffs, Fraction(arg))
        if isinstance(arg, RatFun):
            if not arg.is_polynomial():
                raise TypeError("polynomial argument expected, got %s" % arg)
            arg = arg.to_poly()
        if arg.is_constant():
            return _horner(coeffs, arg.constant_value())
        memo_key = (key, arg) if key is not None else None
        if memo_key is not None and memo_key in self._memo:
            return self._memo[memo_key]
        acc = MultiPoly.const(coeffs[-1])
        for c in reversed(coeffs[:-1]):
            acc = acc * arg + c
        if memo_key is not None:
            self._memo[memo_key] = acc
        return acc

    def B(self, k, arg):
        return self.poly(self.seq.bernoulli_coeffs(k), arg, ("B", k))

    def E(self, k, arg):
        return self.poly(self.seq.euler_coeffs(k), arg, ("E", k))

    def binom(self, arg, k):
        if isinstance(arg, _SCALARS):
            return binom_rational(Fraction(arg), k)
        if isinstance(arg, RatFun):
            arg = arg.to_poly()
        if arg.is_constant():
            return binom_rational(arg.constant_value(), k)
        return binom_poly(arg, k)

    def bnum(self, k):
        return self.seq.bernoulli_number(k)

    def enum(self, k):
        return self.seq.euler_number(k)

    def harmonic(self, n):
        return harmonic(n)

    def sum(self, terms):
        """Sum several summands, accumulating polynomials before RatFuns."""
        scalar = Fraction(0)
        polys = []
        rats = []
        for term in terms:
            if isinstance(term, _SCALARS):
                scalar += term
            elif isinstance(term, MultiPoly):
                polys.append(term)
            else:
                rats.append(term)
        total = _sum_polys(polys) + scalar if polys else scalar
        for r in rats:
            total = r + total
        return total

    def limit(self, fn, var, c):
        """Limit of ``fn(self, v)`` as the variable ``v`` tends to ``c``."""
        sub = SymbolicAlgebra(values={k: q for k, q in self.values.items() if k != var},
                              cache=self.seq)
        sub._memo = self._memo
        expr = fn(sub, MultiPoly.var(var))
        result = limit_at(expr, var, c)
        if result.is_polynomial():
            poly = result.to_poly()
            return poly.constant_value() if poly.is_constant() else poly
        return result

    def to_ratfun(self, value):
        return value if isinstance(value, RatFun) else RatFun(value)


def _sum_polys(polys):
    if len(polys) == 1:
        return polys[0]
    # balanced pairwise summation keeps intermediate dicts small
    while len(polys) > 1:
        polys = [polys[i] + polys[i + 1] if i + 1 < len(polys) else polys[i]
                 for i in range(0, len(polys), 2)]
    return polys[0]


@lru_cache(maxsize=65536)
def _bern_at(k, value):
    return _horner(default_cache().bernoulli_coeffs(k), value)


@lru_cache(maxsize=65536)
def _euler_at(k, value):
    return _horner(default_cache().euler_coeffs(k), value)


class NumericAlgebra:
    """Fraction arithmetic at a single point ``assignment``."""

    def __init__(self, assignment, cache=None):
        self.assignment = {v: Fraction(q) for v, q in assignment.items()}
        self.seq = cache or default_cache()

    def var(self, name):
        try:
            return self.assignment[name]
        except KeyError:
            raise KeyError("no sample value for variable %r" % name) from None

    def poly(self, coeffs, arg, key=None):
        return _horner(coeffs, Fraction(arg))

    def B(self, k, arg):
        if self.seq is default_cache():
            return _bern_at(k, Fraction(arg))
        return _horner(self.seq.bernoulli_coeffs(k), Fraction(arg))

    def E(self, k, arg):
        if self.seq is default_cache():
            return _euler_at(k, Fraction(arg))
        return _horner(self.seq.euler_coeffs(k), Fraction(arg))

    def binom(self, arg, k):
        return binom_rational(Fraction(arg), k)

    def bnum(self, k):
        return self.seq.bernoulli_number(k)

    def enum(self, k):
        return self.seq.euler_number(k)

    def harmonic(self, n):
        return harmonic(n)

    def sum(self, terms):
        return sum(terms, Fraction(0))

    def limit(self, fn, var, c):
        # the limit variable stays symbolic; the others are pinned to the point
        sub = SymbolicAlgebra(values={k: q for k, q in self.assignment.items() if k != var},
                              cache=self.seq)
        value = sub.limit(fn, var, c)
        if isinstance(value, RatFun):
            value = value.value()
        elif isinstance(value, MultiPoly):
            value = value.constant_value()
        return value

    def to_ratfun(self, value):
        return value


class Deg:
    """Degree bound of a rational expression: per-variable (numerator, denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = tuple(num)
        self.den = tuple(den) if den is not None else (0,) * len(VARIABLES)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Deg):
            return other
        if isinstance(other, _SCALARS):
            return Deg((0,) * len(VARIABLES))
        return None

    @staticmethod
    def _vadd(a, b):
        return tuple(i + j for i, j in zip(a, b))

    @staticmethod
    def _vmax(a, b):
        return tuple(max(i, j) for i, j in zip(a, b))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not any(o.den):
            return Deg(self._vmax(self.num, self._vadd(o.num, self.den)), self.den)
        if not any(self.den):
            return Deg(self._vmax(self._vadd(self.num, o.den), o.num), o.den)
        # a/b + c/d = (ad + cb)/(bd)
        return Deg(self._vmax(self._vadd(self.num, o.den), self._vadd(o.num, self.den)),
                   self._vadd(self.den, o.den))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Deg(self._vadd(self.num, o.num), self._vadd(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Deg(self._vadd(self.num, o.den), self._vadd(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        return Deg(tuple(n * e for e in self.num), tuple(n * e for e in self.den))

    def power(self, k):
        """Bound for a degree-k polynomial evaluated at this expression."""
        top = self._vmax(self.num, self.den)
        return Deg(tuple(k * e for e in top), tuple(k * e for e in self.den))

    def numerator_bound(self, var):
        return self.num[VARIABLES.index(var)]

    def __repr__(self):
        return "Deg(num=%s, den=%s)" % (self.num, self.den)


def cross_degree(lhs, rhs):
    """Per-variable degree bound of num(lhs)*den(rhs) - num(rhs)*den(lhs)."""
    lhs = Deg._coerce(lhs)
    rhs = Deg._coerce(rhs)
    return Deg._vmax(Deg._vadd(lhs.num, rhs.den), Deg._vadd(rhs.num, lhs.den))


class DegreeAlgebra:
    """Tropical shadow of :class:`SymbolicAlgebra`."""

    def __init__(self, cache=None):
        self.seq = cache or default_cache()

    def var(self, name):
        vec = [0] * len(VARIABLES)
        vec[VARIABLES.index(name)] = 1
        return Deg(vec)

    def poly(self, coeffs, arg, key=None):
        if isinstance(arg, _SCALARS):
            return _horner(coeffs, Fraction(arg))
        return arg.power(len(coeffs) - 1)

    def B(self, k, arg):
        return self.poly(self.seq.bernoulli_coeffs(k), arg)

    def E(self, k, arg):
        return self.poly(self.seq.euler_coeffs(k), arg)

    def binom(self, arg, k):
        if isinstance(arg, _SCALARS):
            return binom_rational(Fraction(arg), k)
        return arg.power(max(k, 0))

    def bnum(self, k):
        return self.seq.bernoulli_number(k)

    def enum(self, k):
        return self.seq.euler_number(k)

    def harmonic(self, n):
        return harmonic(n)

    def sum(self, terms):
        total = Fraction(0)
        for term in terms:
            total = total + term
        return total

    def limit(self, fn, var, c):
        # stripping (var - c) and evaluating never raises degrees elsewhere
        return fn(self, Deg((0,) * len(VARIABLES)))

    def to_ratfun(self, value):
        return value


def ensure_no_pole(fn):
    """Run ``fn`` converting ZeroDivisionError from Fraction arithmetic to PoleError."""
    try:
        return fn()
    except PoleError:
        raise
    except ZeroDivisionError as exc:
        raise PoleError(str(exc)) from None
