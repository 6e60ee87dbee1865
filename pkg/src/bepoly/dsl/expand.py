"""Evaluation of DSL trees under any of the three algebras.

Names resolve in this order: integers bound by the caller or by an enclosing
``Sum``, then ``let`` constraints, then the ring variables x, y, r, s, t, a.
Anything else (``z`` without a ``let``, an unbound ``n``...) is an
UnboundIndex error.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import DegreeAlgebra, NumericAlgebra, SymbolicAlgebra
from ..errors import DivisionByZeroPolynomial, DSLError, NonIntegerIndex, PoleError, UnboundIndex
from ..poly import VARIABLES, MultiPoly
from ..ratfun import RatFun
from . import nodes as N
from .parser import parse, render

_INDEX_NAMES = ("n", "l", "m", "k")


@dataclass(frozen=True)
class Bindings:
    """Integer indices plus ordered ``let`` constraints ``(var, expr)``."""
    n: int = None
    l: int = None
    m: int = None
    lets: tuple = ()
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        lets = []
        for var, expr in self.lets:
            if isinstance(expr, str):
                expr = parse(expr)
            if var in _INDEX_NAMES or var not in N.VARIABLE_NAMES:
                raise DSLError("cannot constrain %r: constraints bind one of %s"
                               % (var, ", ".join(sorted(N.VARIABLE_NAMES - set(_INDEX_NAMES)))))
            lets.append((var, expr))
        object.__setattr__(self, "lets", tuple(lets))
        _check_affine(self)

    def integers(self):
        out = {k: v for k, v in (("n", self.n), ("l", self.l), ("m", self.m)) if v is not None}
        out.update(self.extra)
        return out

    def with_indices(self, **idx):
        ints = dict(n=self.n, l=self.l, m=self.m)
        ints.update(idx)
        return Bindings(ints["n"], ints["l"], ints["m"], self.lets, dict(self.extra))


def parse_let(text):
    """``"z = 1 - x - y"`` (trailing ``;`` optional) -> ``("z", expr)``."""
    text = text.strip().rstrip(";")
    if text.startswith("let "):
        text = text[4:]
    name, sep, rhs = text.partition("=")
    if not sep or not name.strip().isidentifier():
        raise DSLError("constraint must look like 'var = expression', got %r" % text)
    return name.strip(), parse(rhs)


def _check_affine(bindings):
    """Every let must expand to an affine form (total degree <= 1)."""
    expander = Expander(SymbolicAlgebra(), bindings)
    for var, _ in bindings.lets:
        try:
            value = expander.let_value(var)
        except UnboundIndex:
            # depends on an index the caller has not bound yet
            continue
        if isinstance(value, RatFun):
            if not value.is_polynomial():
                raise DSLError("constraint %s is not affine" % var)
            value = value.to_poly()
        if isinstance(value, MultiPoly) and value.degree() > 1:
            raise DSLError("constraint %s = %s is not affine" % (var, value))


class Expander:
    def __init__(self, alg, bindings=None):
        self.alg = alg
        self.bindings = bindings or Bindings()
        self.ints = dict(self.bindings.integers())
        self.lets = dict(self.bindings.lets)
        self._let_cache = {}
        self._resolving = set()
        self._index = _IndexEvaluator(self)

    # -- names ----------------------------------------------------------
    def let_value(self, name):
        if name not in self._let_cache:
            if name in self._resolving:
                raise DSLError("constraint %s refers to itself" % name)
            self._resolving.add(name)
            try:
                self._let_cache[name] = self.eval(self.lets[name], {})
            finally:
                self._resolving.discard(name)
        return self._let_cache[name]

    def lookup(self, name, env):
        if name in env:
            return Fraction(env[name])
        if name in self.ints:
            return Fraction(self.ints[name])
        if name in self.lets:
            return self.let_value(name)
        if name in VARIABLES:
            return self.alg.var(name)
        raise UnboundIndex("%s is not bound" % name)

    def index(self, e, env, what="index"):
        return self._index.integer(e, env, what)

    # -- evaluation -----------------------------------------------------
    def eval(self, e, env):
        method = getattr(self, "_" + type(e).__name__)
        return method(e, env)

    def _IntLit(self, e, env):
        return Fraction(e.value)

    def _RatLit(self, e, env):
        return Fraction(e.num, e.den)

    def _Var(self, e, env):
        return self.lookup(e.name, env)

    def _Add(self, e, env):
        return self.eval(e.left, env) + self.eval(e.right, env)

    def _Sub(self, e, env):
        return self.eval(e.left, env) - self.eval(e.right, env)

    def _Mul(self, e, env):
        return self.eval(e.left, env) * self.eval(e.right, env)

    def _Div(self, e, env):
        num = self.eval(e.left, env)
        den = self.eval(e.right, env)
        if isinstance(self.alg, DegreeAlgebra):
            return num / den
        if _is_zero(den):
            if isinstance(self.alg, NumericAlgebra):
                raise PoleError("division by zero at the sample point")
            raise DivisionByZeroPolynomial("division by the zero polynomial in %s" % render(e))
        return num / den

    def _Neg(self, e, env):
        return -self.eval(e.operand, env)

    def _Pow(self, e, env):
        k = self.index(e.exponent, env, "exponent")
        if k < 0:
            raise NonIntegerIndex("exponent %s is negative; write a quotient instead" % render(e.exponent))
        base = self.eval(e.base, env)
        return base ** k

    def _Binom(self, e, env):
        k = self.index(e.lower, env, "binomial lower index")
        upper = self.eval(e.upper, env)
        try:
            return self.alg.binom(upper, k)
        except (ValueError, TypeError):
            raise DSLError("binomial upper argument must be a polynomial: %s" % render(e.upper)) from None

    def _poly_call(self, e, env, fn, label):
        k = self.index(e.index, env)
        if k < 0:
            raise DSLError("%s needs a nonnegative index, got %d" % (label, k))
        arg = self.eval(e.arg, env)
        try:
            return fn(k, arg)
        except (ValueError, TypeError):
            raise DSLError("%s needs a polynomial argument: %s" % (label, render(e.arg))) from None

    def _B(self, e, env):
        return self._poly_call(e, env, self.alg.B, "B")

    def _E(self, e, env):
        return self._poly_call(e, env, self.alg.E, "E")

    def _number(self, e, env, fn, label):
        k = self.index(e.index, env)
        if k < 0:
            raise DSLError("%s needs a nonnegative index, got %d" % (label, k))
        return fn(k)

    def _Bnum(self, e, env):
        return self._number(e, env, self.alg.bnum, "Bnum")

    def _Enum(self, e, env):
        return self._number(e, env, self.alg.enum, "Enum")

    def _H(self, e, env):
        return self._number(e, env, self.alg.harmonic, "H")

    def _KDelta(self, e, env):
        return Fraction(int(self.index(e.a, env) == self.index(e.b, env)))

    def _Sum(self, e, env):
        lo = self.index(e.lo, env, "summation bound")
        hi = self.index(e.hi, env, "summation bound")
        terms = []
        for k in range(lo, hi + 1):
            inner = dict(env)
            inner[e.var] = k
            terms.append(self.eval(e.body, inner))
        return self.alg.sum(terms)


def _is_zero(value):
    if isinstance(value, (int, Fraction)):
        return value == 0
    return value.is_zero()


class _IndexEvaluator:
    """Evaluates index positions to ints; ring variables are not allowed there."""

    def __init__(self, outer):
        self.outer = outer
        self.expander = None

    def integer(self, e, env, what):
        if self.expander is None:
            self.expander = _IntegerExpander(self.outer)
        value = self.expander.eval(e, env)
        if not isinstance(value, Fraction) or value.denominator != 1:
            raise NonIntegerIndex("%s %s is not an integer" % (what, render(e)))
        return int(value)


class _IntegerExpander(Expander):
    def __init__(self, outer):
        super().__init__(NumericAlgebra({}, cache=outer.alg.seq), outer.bindings)
        self.ints = outer.ints

    def lookup(self, name, env):
        if name in env:
            return Fraction(env[name])
        if name in self.ints:
            return Fraction(self.ints[name])
        if name in self.lets or name in VARIABLES:
            raise NonIntegerIndex("index position depends on the variable %s" % name)
        raise UnboundIndex("%s is not bound" % name)


def evaluate(e, bindings=None, alg=None):
    """Value of ``e`` in ``alg`` (symbolic by default)."""
    if isinstance(e, str):
        e = parse(e)
    return Expander(alg or SymbolicAlgebra(), bindings).eval(e, {})


def expand(e, bindings=None):
    """Fully expanded RatFun of ``e``."""
    value = evaluate(e, bindings)
    return value if isinstance(value, RatFun) else RatFun(value)
