"""Sparse multivariate polynomials over the rationals.

The variable universe is fixed: ``x, y, r, s, t, a``.  A monomial is stored
as one packed integer (10 bits of exponent per variable, ``x`` in the most
significant slot), so integer order on keys is lexicographic order on
exponent vectors.  Coefficients are kept as integer numerators over a single
positive common denominator; the pair is always fully reduced, which makes
the representation canonical and equality a plain dict comparison.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import as_rational, format_rational

VARIABLES = ("x", "y", "r", "s", "t", "a")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_BITS = 10
_MASK = (1 << _BITS) - 1
_SHIFT = {v: _BITS * (len(VARIABLES) - 1 - i) for i, v in enumerate(VARIABLES)}
MAX_DEGREE = _MASK


def _pack(exps):
    key = 0
    for e in exps:
        if e < 0 or e > MAX_DEGREE:
            raise OverflowError("exponent %d outside 0..%d" % (e, MAX_DEGREE))
        key = (key << _BITS) | e
    return key


def _unpack(key):
    out = []
    for _ in VARIABLES:
        out.append(key & _MASK)
        key >>= _BITS
    return tuple(reversed(out))


def _exp_of(key, var):
    return (key >> _SHIFT[var]) & _MASK


def _check_var(var):
    if var not in _INDEX:
        raise ValueError("unknown variable %r (universe is %s)" % (var, ", ".join(VARIABLES)))


def _lcm(a, b):
    return a // gcd(a, b) * b


class MultiPoly:
    """Immutable polynomial in the variables of :data:`VARIABLES`."""

    __slots__ = ("_c", "_d", "_degs", "_hash")

    def __init__(self, terms=None):
        """Build from a mapping of exponents to rational coefficients.

        Keys may be exponent tuples (one entry per variable, shorter tuples
        are right-padded with zeros) or ``{var: exponent}`` dicts.
        """
        c = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            fracs = []
            for exps, coef in items:
                if isinstance(exps, dict):
                    vec = [0] * len(VARIABLES)
                    for v, e in exps.items():
                        _check_var(v)
                        vec[_INDEX[v]] = e
                    exps = vec
                exps = tuple(exps) + (0,) * (len(VARIABLES) - len(exps))
                fracs.append((_pack(exps), as_rational(coef)))
            den = 1
            for _, q in fracs:
                den = _lcm(den, q.denominator)
            for key, q in fracs:
                c[key] = c.get(key, 0) + q.numerator * (den // q.denominator)
            self._set(c, den)
        else:
            self._set(c, 1)

    def _set(self, c, d):
        # drop zeros and reduce numerators against the common denominator
        c = {k: v for k, v in c.items() if v}
        if not c:
            d = 1
        else:
            g = gcd(d, *c.values())
            if g != 1:
                c = {k: v // g for k, v in c.items()}
                d //= g
        self._c = c
        self._d = d
        self._degs = None
        self._hash = None

    @classmethod
    def _make(cls, c, d):
        obj = cls.__new__(cls)
        obj._set(c, d)
        return obj

    @classmethod
    def _make_reduced(cls, c, d):
        obj = cls.__new__(cls)
        obj._c = c
        obj._d = d
        obj._degs = None
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, value):
        q = as_rational(value)
        if not q:
            return cls._make_reduced({}, 1)
        return cls._make_reduced({0: q.numerator}, q.denominator)

    @classmethod
    def var(cls, name):
        _check_var(name)
        return cls._make_reduced({1 << _SHIFT[name]: 1}, 1)

    # -- inspection ---------------------------------------------------
    @property
    def terms(self):
        """Exponent tuple -> Fraction, in descending lexicographic order."""
        d = self._d
        return {_unpack(k): Fraction(self._c[k], d) for k in sorted(self._c, reverse=True)}

    def __len__(self):
        return len(self._c)

    def coefficient(self, exps):
        exps = tuple(exps) + (0,) * (len(VARIABLES) - len(exps))
        return Fraction(self._c.get(_pack(exps), 0), self._d)

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant_value(self):
        """The value of a constant polynomial; ValueError otherwise."""
        if not self.is_constant():
            raise ValueError("polynomial %s is not constant" % self)
        return Fraction(self._c.get(0, 0), self._d)

    def degree_vector(self):
        if self._degs is None:
            degs = [0] * len(VARIABLES)
            for key in self._c:
                for i, e in enumerate(_unpack(key)):
                    if e > degs[i]:
                        degs[i] = e
            self._degs = tuple(degs)
        return self._degs

    def degree(self, var=None):
        """Degree in ``var``, or total degree when ``var`` is None (-1 for zero)."""
        if not self._c:
            return -1
        if var is None:
            return max(sum(_unpack(k)) for k in self._c)
        _check_var(var)
        return self.degree_vector()[_INDEX[var]]

    def variables(self):
        return tuple(v for v, dg in zip(VARIABLES, self.degree_vector()) if dg)

    def content(self):
        """Positive rational content: gcd of numerators over the denominator."""
        if not self._c:
            return Fraction(0)
        return Fraction(gcd(*self._c.values()), self._d)

    def leading_coefficient(self):
        if not self._c:
            return Fraction(0)
        return Fraction(self._c[max(self._c)], self._d)

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        d1, d2 = self._d, o._d
        if d1 == d2:
            c = dict(self._c)
            for k, v in o._c.items():
                c[k] = c.get(k, 0) + v
            return MultiPoly._make(c, d1)
        den = _lcm(d1, d2)
        f1, f2 = den // d1, den // d2
        c = {k: v * f1 for k, v in self._c.items()}
        for k, v in o._c.items():
            c[k] = c.get(k, 0) + v * f2
        return MultiPoly._make(c, den)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make_reduced({k: -v for k, v in self._c.items()}, self._d)

    def __pos__(self):
        return self

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

    def scale(self, q):
        q = as_rational(q)
        if not q or not self._c:
            return MultiPoly._make_reduced({}, 1)
        p, d = q.numerator, q.denominator
        return MultiPoly._make({k: v * p for k, v in self._c.items()}, self._d * d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return MultiPoly._make_reduced({}, 1)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, vb), = b.items()
            if kb == 0:
                return MultiPoly._make({k: v * vb for k, v in a.items()}, self._d * other._d)
        da, db = self.degree_vector(), other.degree_vector()
        for ea, eb in zip(da, db):
            if ea + eb > MAX_DEGREE:
                raise OverflowError("product degree exceeds %d" % MAX_DEGREE)
        c = {}
        get = c.get
        bitems = list(b.items())
        for ka, va in a.items():
            for kb, vb in bitems:
                k = ka + kb
                c[k] = get(k, 0) + va * vb
        return MultiPoly._make(c, self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(1 / Fraction(other))
        if isinstance(other, MultiPoly) and other.is_constant():
            return self / other.constant_value()
        from .ratfun import RatFun
        if isinstance(other, MultiPoly):
            return RatFun(self, other)
        if isinstance(other, RatFun):
            return RatFun(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._d == other._d and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._d, frozenset(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- structure in one variable -------------------------------------
    def coefficients_in(self, var):
        """List ``[c0, c1, ...]`` with ``self == sum(c_i * var**i)``."""
        _check_var(var)
        shift = _SHIFT[var]
        buckets = {}
        for k, v in self._c.items():
            e = (k >> shift) & _MASK
            buckets.setdefault(e, {})[k - (e << shift)] = v
        if not buckets:
            return [MultiPoly()]
        out = []
        for e in range(max(buckets) + 1):
            out.append(MultiPoly._make(buckets.get(e, {}), self._d))
        return out

    @classmethod
    def from_coefficients(cls, var, coeffs):
        """Inverse of :meth:`coefficients_in`."""
        v = cls.var(var)
        result = MultiPoly()
        for c in reversed(coeffs):
            result = result * v + c
        return result

    def substitute(self, var, replacement):
        """Replace every occurrence of ``var`` by ``replacement`` and expand."""
        _check_var(var)
        if isinstance(replacement, AffineForm):
            replacement = replacement.to_poly()
        if not isinstance(replacement, MultiPoly):
            replacement = MultiPoly.const(replacement)
        if var not in self.variables():
            return self
        coeffs = self.coefficients_in(var)
        result = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            result = result * replacement + c
        return result

    def evaluate(self, assignment):
        """Substitute rational values for some variables; returns a MultiPoly."""
        values = {}
        for v, q in assignment.items():
            _check_var(v)
            values[v] = as_rational(q)
        if not values:
            return self
        den = 1
        for q in values.values():
            den = _lcm(den, q.denominator)
        # per-variable power tables, numerators scaled to a common base
        degs = self.degree_vector()
        tables = {}
        total_scale = 1
        for v, q in values.items():
            dg = degs[_INDEX[v]]
            num = q.numerator * (den // q.denominator)
            tables[v] = [num ** e * den ** (dg - e) for e in range(dg + 1)]
            total_scale *= den ** dg
        c = {}
        for k, coef in self._c.items():
            rest = k
            for v, table in tables.items():
                e = (k >> _SHIFT[v]) & _MASK
                coef *= table[e]
                rest -= e << _SHIFT[v]
            c[rest] = c.get(rest, 0) + coef
        return MultiPoly._make(c, self._d * total_scale)

    def value(self, assignment=None):
        """Fully evaluate to a Fraction; every occurring variable must be assigned."""
        p = self.evaluate(assignment or {})
        return p.constant_value()

    def derivative(self, var):
        """Formal partial derivative with respect to ``var``."""
        _check_var(var)
        shift = _SHIFT[var]
        unit = 1 << shift
        c = {}
        for k, v in self._c.items():
            e = (k >> shift) & _MASK
            if e:
                c[k - unit] = v * e
        return MultiPoly._make(c, self._d)

    def shift(self, var, amount=1):
        """p(var + amount)."""
        return self.substitute(var, MultiPoly.var(var) + amount)

    def delta(self, var):
        """Forward difference p(var+1) - p(var)."""
        return self.shift(var) - self

    def delta_star(self, var):
        """Forward sum p(var+1) + p(var)."""
        return self.shift(var) + self

    # -- rendering ----------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for key in sorted(self._c, reverse=True):
            coef = Fraction(self._c[key], self._d)
            factors = []
            for v, e in zip(VARIABLES, _unpack(key)):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append("%s^%d" % (v, e))
            mag = abs(coef)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append("-" + body if coef < 0 else body)
            else:
                parts.append(("- " if coef < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "MultiPoly(%s)" % self


ZERO = MultiPoly()
ONE = MultiPoly.const(1)


class AffineForm:
    """constant + sum(coefficient * variable), degree at most one."""

    __slots__ = ("constant", "coefficients")

    def __init__(self, constant=0, coefficients=None):
        self.constant = as_rational(constant)
        coeffs = {}
        for v, q in (coefficients or {}).items():
            _check_var(v)
            q = as_rational(q)
            if q:
                coeffs[v] = q
        self.coefficients = coeffs

    @classmethod
    def from_poly(cls, p):
        if isinstance(p, (int, Fraction)):
            return cls(p)
        if p.degree() > 1:
            raise ValueError("%s is not affine" % p)
        coeffs = {}
        for exps, q in p.terms.items():
            if any(exps):
                coeffs[VARIABLES[exps.index(1)]] = q
        return cls(p.coefficient(()), coeffs)

    def to_poly(self):
        p = MultiPoly.const(self.constant)
        for v, q in self.coefficients.items():
            p = p + MultiPoly.var(v).scale(q)
        return p

    def __eq__(self, other):
        if not isinstance(other, AffineForm):
            return NotImplemented
        return self.constant == other.constant and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.constant, frozenset(self.coefficients.items())))

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return "AffineForm(%s)" % self


def as_poly(value):
    """Coerce scalars, AffineForms and MultiPolys to a MultiPoly."""
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, AffineForm):
        return value.to_poly()
    return MultiPoly.const(value)


@lru_cache(maxsize=4096)
def _binom_cached(base, k):
    if k == 0:
        return ONE
    return (_binom_cached(base, k - 1) * (base - (k - 1))).scale(Fraction(1, k))


def binom_poly(L, k):
    """The polynomial L(L-1)...(L-k+1)/k! for an affine (or any) polynomial L."""
    if k < 0:
        return ZERO
    return _binom_cached(as_poly(L), k)
