"""Both sides of every catalogued Bernoulli/Euler identity.

Each builder takes an algebra (see :mod:`bepoly.algebra`) plus integer
indices and returns ``(lhs, rhs)``.  Constraints are eliminated while
building: ``z = 1 - x - y`` throughout, and a dependent parameter such as
``t = n - r - s`` is expressed through the free ones, so every identity is an
unconstrained polynomial or rational-function identity.

Catalog keys follow the numbering of the source they were taken from; the
builder names say what each identity is about.
"""

from dataclasses import dataclass, field
from fractions import Fraction as F
from itertools import product
from math import comb
from typing import Callable

from .algebra import SymbolicAlgebra
from .errors import IndexOutOfDomain, UnknownIdentity
from .poly import AffineForm, MultiPoly, as_poly


def _sign(k):
    return -1 if k % 2 else 1


def _kdelta(a, b):
    return 1 if a == b else 0


def _xyz(alg):
    x, y = alg.var("x"), alg.var("y")
    return x, y, 1 - x - y


# -- generic pieces -----------------------------------------------------

def bracket(alg, n, S, T, X, Y):
    """sum_k (-1)^k C(S,k) C(T,n-k) B_{n-k}(X) B_k(Y)."""
    return alg.sum(
        _sign(k) * (alg.binom(S, k) * alg.binom(T, n - k)) * (alg.B(n - k, X) * alg.B(k, Y))
        for k in range(n + 1))


def m_bracket(n, S, T, X, Y):
    """The bracket above as an expanded polynomial; arguments are affine forms."""
    if n < 1:
        raise IndexOutOfDomain("m_bracket needs n >= 1")
    args = [as_poly(v) if isinstance(v, (AffineForm, MultiPoly)) else F(v) for v in (S, T, X, Y)]
    value = bracket(SymbolicAlgebra(), n, *args)
    return as_poly(value)


# -- central theorem -------------------------------------------------------

def mixed_bernoulli_euler_sum(alg, n):
    """B/E convolution with r + s + t = n - 1."""
    x, y, z = _xyz(alg)
    r, s = alg.var("r"), alg.var("s")
    t = n - 1 - r - s
    first = alg.sum(_sign(k) * (alg.binom(r, k) * alg.binom(s, n - k)) * (alg.B(k, x) * alg.E(n - k, z))
                    for k in range(n + 1))
    second = alg.sum(_sign(k) * (alg.binom(r, k) * alg.binom(t, n - k)) * (alg.B(k, y) * alg.E(n - k, z))
                     for k in range(n + 1))
    lhs = first - _sign(n) * second
    rhs = r * F(1, 2) * alg.sum(
        _sign(l) * (alg.binom(s, l) * alg.binom(t, n - 1 - l)) * (alg.E(l, y) * alg.E(n - 1 - l, x))
        for l in range(n))
    return lhs, rhs


def bracket_symmetry(alg, n):
    """r[s,t;x,y] + s[t,r;y,z] + t[r,s;z,x] = 0 with r + s + t = n."""
    x, y, z = _xyz(alg)
    r, s = alg.var("r"), alg.var("s")
    t = n - r - s
    lhs = alg.sum([r * bracket(alg, n, s, t, x, y),
                   s * bracket(alg, n, t, r, y, z),
                   t * bracket(alg, n, r, s, z, x)])
    return lhs, F(0)


# -- parameter alpha --------------------------------------------------------

def alpha_euler_convolution(alg, n):
    x, y, a = alg.var("x"), alg.var("y"), alg.var("a")
    lhs = (a + n + 1) * F(1, 2) * alg.sum(
        alg.binom(a + k, k) * (alg.E(k, x) * alg.E(n - 1 - k, y)) for k in range(n))
    w = x - y
    rhs = alg.sum(
        alg.binom(a + n + 1, k)
        * (_sign(n - k) * alg.B(k, x) - alg.binom(a + n - k, n - k) * alg.B(k, y))
        * alg.E(n - k, w)
        for k in range(n + 1))
    return lhs, rhs


def alpha_bernoulli_convolution(alg, n):
    x, y, a = alg.var("x"), alg.var("y"), alg.var("a")
    w = x - y
    lhs = (a + n + 2) * alg.sum(
        alg.binom(a + k, k) * (alg.B(k, x) * alg.B(n - k, y)) for k in range(n + 1))
    rhs = (a + 1) * alg.sum(
        _sign(n - k) * alg.binom(a + n + 2, k) * (alg.B(k, x) * alg.B(n - k, w))
        for k in range(n + 1))
    rhs = rhs + alg.sum(
        (alg.binom(a + n + 2, k) * alg.binom(a + n - k, n - k)) * (alg.B(k, y) * alg.B(n - k, w))
        for k in range(n + 1))
    return lhs, rhs


# -- shifted-index families (n > l >= 0) ------------------------------------

def shifted_euler_products(alg, n, l):
    x, y = alg.var("x"), alg.var("y")
    lo = _kdelta(l, 0)
    lhs = F(n - l + 1, 2) * alg.sum(
        comb(n, k) * comb(n, k + l - 1) * (alg.E(k + l - 1, x) * alg.E(n - k, y))
        for k in range(lo, n + 1) if k + l - 1 <= n)
    w = x - y
    rhs = alg.sum(
        comb(n, k) * comb(k + n, k + l) * ((_sign(n - k) * alg.B(k + l, x) - alg.B(k + l, y)) * alg.E(n - k, w))
        for k in range(n + 1))
    return lhs, rhs


def shifted_bernoulli_products(alg, n, l):
    x, y = alg.var("x"), alg.var("y")
    lhs = F(n - l, n) * alg.sum(
        comb(n, k) * comb(n, k + l) * (alg.B(k + l, x) * alg.B(n - k, y)) for k in range(n - l + 1))
    w = x - y
    rhs = alg.sum(
        comb(n, k) * comb(k + n - 1, k + l) * ((_sign(n - k) * alg.B(k + l, x) + alg.B(k + l, y)) * alg.B(n - k, w))
        for k in range(n + 1))
    return lhs, rhs


def shifted_euler_diagonal(alg, n, l):
    x = alg.var("x")
    lo = _kdelta(l, 0)
    lhs = F((n + 1) * (n + 1 - l), 8) * alg.sum(
        comb(n, k) * comb(n, k + l - 1) * (alg.E(k + l - 1, x) * alg.E(n - k, x))
        for k in range(lo, n + 1) if k + l - 1 <= n)
    rhs = alg.sum(
        comb(n + 1, k) * comb(k + n, k + l) * (2 ** (n - k + 1) - 1) * alg.bnum(n - k + 1) * alg.B(k + l, x)
        for k in range(n))
    return lhs, rhs


def shifted_bernoulli_diagonal(alg, n, l):
    x = alg.var("x")
    lhs = alg.sum(comb(n, k) * comb(n, k + l) * (alg.B(k + l, x) * alg.B(n - k, x))
                  for k in range(n - l + 1))

    def term(k):
        return comb(n, k) * comb(k + n - 1, k + l) * alg.bnum(n - k) * alg.B(k + l, x)

    # the sum skips k = n - 1: full sum minus that term
    full = alg.sum(term(k) for k in range(n + 1))
    rhs = F(2 * n, n - l) * (full - term(n - 1))
    return lhs, rhs


def euler_number_convolution(alg, n):
    lhs = F((n + 1) ** 2, 8) * alg.sum(
        comb(n, k) * comb(n, k + 1) * alg.enum(k) * alg.enum(n - 1 - k) for k in range(n))
    rhs = -alg.sum(
        comb(n + 1, k) * comb(n + k, n) * 2 ** (n - k) * (F(2) ** (k - 1) - 1) * (2 ** (n - k + 1) - 1)
        * alg.bnum(k) * alg.bnum(n - k + 1)
        for k in range(n))
    return lhs, rhs


def squared_binomial_bernoulli(alg, n):
    lhs = alg.sum(comb(n, k) ** 2 * alg.bnum(k) * alg.bnum(n - k) for k in range(2, n - 1))
    lhs -= 2 * alg.sum(comb(n, k) * comb(n + k - 1, k) * alg.bnum(k) * alg.bnum(n - k)
                       for k in range(2, n - 1))
    rhs = 2 * comb(2 * n - 1, n - 1) * alg.bnum(n)
    return lhs, rhs


# -- three-index family (1 <= l <= min(m, n)) ---------------------------------

def three_index_bernoulli_euler(alg, l, m, n):
    x, y, z = _xyz(alg)
    lhs = _sign(m) * alg.sum(
        comb(m, k) * comb(n + k, l - 1) * (alg.B(n - l + k + 1, x) * alg.E(m - k, z)) for k in range(m + 1))
    lhs = lhs + _sign(n - l) * alg.sum(
        comb(n, k) * comb(m + k, l - 1) * (alg.B(m - l + k + 1, y) * alg.E(n - k, z)) for k in range(n + 1))
    rhs = -F(l, 2) * alg.sum(
        _sign(k) * comb(m, k) * comb(n, l - k) * (alg.E(n - l + k, x) * alg.E(m - k, y)) for k in range(l + 1))
    return lhs, rhs


def three_index_euler_mixed(alg, l, m, n):
    x, y, z = _xyz(alg)
    lhs = alg.sum(
        _sign(k) * comb(m, k) * comb(n, l - k) * (alg.B(m - k, x) * alg.E(n - l + k, z)) for k in range(l + 1))
    lhs = lhs - _sign(m) * alg.sum(
        comb(m, k) * comb(n + k, l) * (alg.B(m - k, y) * alg.E(n - l + k, z)) for k in range(m + 1))
    rhs = _sign(n - l - 1) * F(m, 2) * alg.sum(
        comb(n, k) * comb(m + k - 1, l) * (alg.E(n - k, y) * alg.E(m - l - 1 + k, x))
        for k in range(_kdelta(l, m), n + 1))
    return lhs, rhs


def three_index_bernoulli(alg, l, m, n):
    x, y, z = _xyz(alg)
    lhs = F(_sign(m), m) * alg.sum(
        comb(m, k) * comb(n + k - 1, l - 1) * (alg.B(n - l + k, x) * alg.B(m - k, z)) for k in range(m + 1))
    lhs = lhs + F(_sign(l) * _sign(n), n) * alg.sum(
        comb(n, k) * comb(m + k - 1, l - 1) * (alg.B(m - l + k, y) * alg.B(n - k, z)) for k in range(n + 1))
    rhs = F(l, m * n) * alg.sum(
        _sign(k) * comb(m, k) * comb(n, l - k) * (alg.B(n - l + k, x) * alg.B(m - k, y)) for k in range(l + 1))
    return lhs, rhs


def woodcock_symmetry(alg, m, n):
    lhs = F(1, m) * alg.sum(comb(m, k) * _sign(k) * alg.bnum(m - k) * alg.bnum(n - 1 + k)
                            for k in range(1, m + 1))
    rhs = F(1, n) * alg.sum(comb(n, k) * _sign(k) * alg.bnum(n - k) * alg.bnum(m - 1 + k)
                            for k in range(1, n + 1))
    return lhs, rhs


# -- free parameter t (rational-function identities) --------------------------

def t_euler_convolution(alg, n):
    x, y, z = _xyz(alg)
    t = alg.var("t")
    lhs = F(_sign(n), 2) * alg.sum(alg.binom(t, k) * (alg.E(k, x) * alg.E(n - 1 - k, y)) for k in range(n))
    first = alg.sum(alg.binom(n - t, k) * (alg.B(k, x) * alg.E(n - k, z)) for k in range(n + 1)) / (n - t)
    second = alg.binom(t, n) * alg.sum(
        comb(n, k) * (alg.E(k, z) * alg.B(n - k, y)) / (t - k) for k in range(n + 1))
    return lhs, first + second


def t_euler_reciprocal(alg, n):
    x, y, z = _xyz(alg)
    t = alg.var("t")
    ctn = alg.binom(t, n)
    lhs = F(n, 2) * ctn * alg.sum(
        comb(n - 1, k) * (alg.E(k, x) * alg.E(n - 1 - k, y)) / (t - k) for k in range(n))
    lhs = lhs - _sign(n) * alg.E(n, z) * ctn * alg.sum(1 / (t - k) for k in range(n))
    rhs = _sign(n) * alg.sum(
        alg.binom(t, n - k) * F(1, k) * (alg.B(k, y) * alg.E(n - k, z)) for k in range(1, n + 1))
    rhs = rhs - alg.sum(
        alg.binom(n - 1 - t, n - k) * F(1, k) * (alg.B(k, x) * alg.E(n - k, z)) for k in range(1, n + 1))
    return lhs, rhs


def t_bernoulli_reciprocal(alg, n, parts=False):
    """With ``parts`` the sides come back as pairs of their two displayed terms."""
    x, y, z = _xyz(alg)
    t = alg.var("t")
    c = alg.binom(t - 1, n - 1)
    l1 = F(_sign(n - 1), n) * c * alg.sum(
        comb(n, k) * (alg.B(k, x) * alg.B(n - k, y)) / (t - k) for k in range(n + 1))
    l2 = -F(1, n) * alg.B(n, z) * c * alg.sum(1 / (t - k) for k in range(1, n))
    r1 = alg.sum(alg.binom(t, n - k) * F(1, k) * (alg.B(k, y) * alg.B(n - k, z))
                 for k in range(1, n + 1)) / t
    r2 = _sign(n) * alg.sum(
        alg.binom(n - t, n - k) * F(1, k) * (alg.B(k, x) * alg.B(n - k, z)) for k in range(1, n + 1)) / (n - t)
    if parts:
        return (l1, l2), (r1, r2)
    return l1 + l2, r1 + r2


# -- t = -1 specializations ---------------------------------------------------

def negative_one_euler(alg, n):
    x, y, z = _xyz(alg)
    lhs = alg.sum(comb(n + 1, k) * ((_sign(n) * alg.B(k, x) - alg.B(k, y)) * alg.E(n - k, z))
                  for k in range(n + 1))
    rhs = F(n + 1, 2) * alg.sum(_sign(l) * (alg.E(l, x) * alg.E(n - 1 - l, y)) for l in range(n))
    return lhs, rhs


def negative_one_harmonic_euler(alg, n):
    x, y, z = _xyz(alg)
    lhs = alg.sum(F(comb(n, k), k) * (alg.B(k, x) * alg.E(n - k, z)) for k in range(1, n + 1))
    lhs = lhs - alg.sum(F(_sign(k), k) * (alg.B(k, y) * alg.E(n - k, z)) for k in range(1, n + 1))
    rhs = F(_sign(n), 2) * alg.sum(comb(n, l) * (alg.E(l, y) * alg.E(n - 1 - l, x)) for l in range(n))
    rhs = rhs - alg.harmonic(n) * alg.E(n, z)
    return lhs, rhs


def negative_one_harmonic_bernoulli(alg, n):
    x, y, z = _xyz(alg)
    lhs = _sign(n) * alg.sum(comb(n + 1, k) * (alg.B(n - k, x) * alg.B(k, y)) for k in range(n + 1))
    lhs = lhs + alg.sum(F(comb(n + 1, k), n - k) * (alg.B(n - k, x) * alg.B(k, z)) for k in range(n))
    rhs = (n + 1) * alg.sum(F(_sign(k), k) * (alg.B(k, y) * alg.B(n - k, z)) for k in range(1, n + 1))
    rhs = rhs + (1 - alg.harmonic(n)) * (n + 1) * alg.B(n, z)
    return lhs, rhs


# -- t -> 0 limits: harmonic-weighted convolutions ----------------------------

def harmonic_euler_first(alg, n):
    x, y, z = _xyz(alg)
    H = alg.harmonic
    lhs = F(1, 2) * alg.sum(F(_sign(k - 1), k) * (alg.E(k, x) * alg.E(n - 1 - k, y)) for k in range(1, n))
    lhs = lhs + H(n - 1) * F(1, 2) * alg.E(n - 1, y)
    rhs = F(1, n) * alg.sum(F(comb(n, k), k) * (alg.E(k, z) * alg.B(n - k, y)) for k in range(1, n + 1))
    rhs = rhs + F(_sign(n), n) * alg.sum(comb(n, k) * H(k) * (alg.E(k, z) * alg.B(n - k, x))
                                         for k in range(1, n + 1))
    return lhs, rhs


def harmonic_euler_second(alg, n):
    x, y, z = _xyz(alg)
    H = alg.harmonic
    lhs = F(_sign(n - 1), 2) * alg.sum(F(comb(n - 1, k), k) * (alg.E(k, x) * alg.E(n - 1 - k, y))
                                       for k in range(1, n))
    lhs = lhs + H(n - 1) * F(1, n) * (alg.E(n, z) + _sign(n) * alg.B(n, y))
    rhs = alg.sum(F(_sign(k), k * (n - k)) * (alg.B(k, y) * alg.E(n - k, z)) for k in range(1, n))
    rhs = rhs + alg.sum(comb(n - 1, k - 1) * H(k - 1) * F(1, k) * (alg.B(k, x) * alg.E(n - k, z))
                        for k in range(1, n + 1))
    return lhs, rhs


def harmonic_bernoulli(alg, n):
    x, y, z = _xyz(alg)
    lhs = alg.sum(F(comb(n - 1, k - 1), k * k) * (alg.B(k, x) * (alg.B(n - k, y) + _sign(n) * alg.B(n - k, z)))
                  for k in range(1, n + 1))
    rhs = alg.sum(F(_sign(n - k), k * (n - k)) * (alg.B(k, y) * alg.B(n - k, z)) for k in range(1, n))
    rhs = rhs - alg.harmonic(n - 1) * F(1, n) * (alg.B(n, y) + _sign(n) * alg.B(n, z))
    return lhs, rhs


def limit_euler_bernoulli(alg, n):
    """Value of the t-parametrized Euler convolution at t = 0."""
    x, y, z = _xyz(alg)
    lhs = F(1, n) * alg.sum(comb(n, k) * (alg.B(k, x) * alg.E(n - k, z)) for k in range(n + 1))
    lhs = lhs + F(_sign(n - 1), n) * alg.B(n, y)
    rhs = F(_sign(n), 2) * alg.E(n - 1, y)
    return lhs, rhs


# -- classical number identities -------------------------------------------

def miki(alg, n):
    b = alg.bnum
    lhs = alg.sum(F(1, k * (n - k)) * b(k) * b(n - k) for k in range(2, n - 1))
    lhs -= alg.sum(F(comb(n, k), k * (n - k)) * b(k) * b(n - k) for k in range(2, n - 1))
    rhs = 2 * alg.harmonic(n) * b(n) / n
    return lhs, rhs


def matiyasevich(alg, n):
    b = alg.bnum
    lhs = (n + 2) * alg.sum(b(k) * b(n - k) for k in range(2, n - 1))
    lhs -= 2 * alg.sum(comb(n + 2, k) * b(k) * b(n - k) for k in range(2, n - 1))
    rhs = n * (n + 1) * b(n)
    return lhs, rhs


# -- lemmas -------------------------------------------------------------------

#: deterministic non-special sequence used when the dual-sequence lemma is run from the catalog
def lemma_sequence(length):
    return [F(l * l - 3, l + 2) * (-1) ** l for l in range(length)]


def dual_sequence_lemma(alg, n, a=None):
    from .sequences import a_poly_coeffs, dual_sequence

    a = list(a) if a is not None else lemma_sequence(n + 1)
    astar = dual_sequence(a[: n + 1])
    x, y, z = _xyz(alg)
    r, s = alg.var("r"), alg.var("s")
    t = n - 1 - r - s
    terms = []
    for k in range(n + 1):
        ak = alg.poly(a_poly_coeffs(k, a), y, ("A", k, tuple(a[: k + 1])))
        akstar = alg.poly(a_poly_coeffs(k, astar), z, ("A*", k, tuple(astar[: k + 1])))
        inner = alg.binom(s, n - k) * ak - _sign(n) * (alg.binom(t, n - k) * akstar)
        terms.append(_sign(k) * alg.binom(r, k) * (x ** (n - k)) * inner)
    return alg.sum(terms), F(0)


def binomial_difference_limit(alg, n, s=None):
    """lim_{t->0} (C(s+t,n) - C(s,n))/t against C(s,n) * sum_{l<n} 1/(s-l)."""
    s = alg.var("s") if s is None else F(s)
    lhs = alg.limit(lambda A, t: (A.binom(s + t, n) - A.binom(s, n)) / t, "t", 0)
    rhs = alg.binom(s, n) * alg.sum(1 / (s - l) for l in range(n))
    return lhs, rhs


def harmonic_limit(alg, n):
    """lim_{t->0} (C(t-1,n) - (-1)^n)/t against (-1)^(n-1) H_n."""
    lhs = alg.limit(lambda A, t: (A.binom(t - 1, n) - _sign(n)) / t, "t", 0)
    return lhs, _sign(n - 1) * alg.harmonic(n)


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    name: str
    builder: Callable
    indices: tuple = ("n",)
    domain: Callable = field(default=lambda n: n >= 1)
    domain_text: str = "n >= 1"
    free_vars: tuple = ()
    poles: Callable = None
    summary: str = ""

    def in_domain(self, idx):
        return bool(self.domain(**idx))

    def pole_set(self, idx):
        """Excluded values per variable, as sorted lists of Fractions."""
        if self.poles is None:
            return {}
        return {v: sorted(F(q) for q in vals) for v, vals in self.poles(**idx).items()}

    def build(self, alg, idx):
        return self.builder(alg, **{k: idx[k] for k in self.indices})


def _t_poles(upto):
    return lambda n: {"t": range(0, n + upto + 1)}


_N_L = dict(indices=("n", "l"), domain=lambda n, l: n > l >= 0, domain_text="n > l >= 0")
_LMN = dict(indices=("l", "m", "n"), domain=lambda l, m, n: 1 <= l <= min(m, n),
            domain_text="1 <= l <= min(m, n)")
_N4 = dict(domain=lambda n: n >= 4, domain_text="n >= 4")

_SPECS = [
    IdentitySpec("thm_1_1_i", mixed_bernoulli_euler_sum, free_vars=("x", "y", "r", "s"),
                 summary="Bernoulli-Euler convolution with r+s+t=n-1, x+y+z=1"),
    IdentitySpec("thm_1_1_ii", bracket_symmetry, free_vars=("x", "y", "r", "s"),
                 summary="cyclic bracket relation with r+s+t=n, x+y+z=1"),
    IdentitySpec("cor_1_1_eq_1_4", alpha_euler_convolution, free_vars=("x", "y", "a"),
                 summary="Euler convolution weighted by C(a+k,k)"),
    IdentitySpec("cor_1_1_eq_1_5", alpha_bernoulli_convolution, free_vars=("x", "y", "a"),
                 summary="Bernoulli convolution weighted by C(a+k,k)"),
    IdentitySpec("cor_1_2_eq_1_6", shifted_euler_products, free_vars=("x", "y"), **_N_L,
                 summary="index-shifted Euler products against Bernoulli at k+l"),
    IdentitySpec("cor_1_2_eq_1_7", shifted_bernoulli_products, free_vars=("x", "y"), **_N_L,
                 summary="index-shifted Bernoulli products"),
    IdentitySpec("cor_1_2_eq_1_8", shifted_euler_diagonal, free_vars=("x",), **_N_L,
                 summary="Euler products on the diagonal y = x"),
    IdentitySpec("cor_1_2_eq_1_9", shifted_bernoulli_diagonal, free_vars=("x",), **_N_L,
                 summary="Bernoulli products on the diagonal y = x"),
    IdentitySpec("remark_1_3_E", euler_number_convolution,
                 summary="Euler-number convolution at x = 1/2"),
    IdentitySpec("remark_1_3_B", squared_binomial_bernoulli, **_N4,
                 summary="squared-binomial Bernoulli-number identity"),
    IdentitySpec("thm_1_2_eq_1_10", three_index_bernoulli_euler, free_vars=("x", "y"), **_LMN,
                 summary="three-index B/E identity with Euler products"),
    IdentitySpec("thm_1_2_eq_1_11", three_index_euler_mixed, free_vars=("x", "y"), **_LMN,
                 summary="three-index B/E identity, mixed form"),
    IdentitySpec("thm_1_2_eq_1_12", three_index_bernoulli, free_vars=("x", "y"), **_LMN,
                 summary="three-index Bernoulli identity"),
    IdentitySpec("woodcock", woodcock_symmetry, indices=("m", "n"),
                 domain=lambda m, n: m >= 1 and n >= 1, domain_text="m, n >= 1",
                 summary="Woodcock's symmetric Bernoulli-number relation"),
    IdentitySpec("thm_1_3_eq_1_13", t_euler_convolution, free_vars=("x", "y", "t"),
                 poles=_t_poles(0), summary="Euler convolution with free t; poles t in {0..n}"),
    IdentitySpec("thm_1_3_eq_1_14", t_euler_reciprocal, free_vars=("x", "y", "t"),
                 poles=_t_poles(-1), summary="reciprocal-weighted Euler sum; poles t in {0..n-1}"),
    IdentitySpec("thm_1_3_eq_1_15", t_bernoulli_reciprocal, free_vars=("x", "y", "t"),
                 poles=_t_poles(0), summary="reciprocal-weighted Bernoulli sum; poles t in {0..n}"),
    IdentitySpec("cor_1_4_eq_1_16", negative_one_euler, free_vars=("x", "y"),
                 summary="t = -1 case of the Euler convolution"),
    IdentitySpec("cor_1_4_eq_1_17", negative_one_harmonic_euler, free_vars=("x", "y"),
                 summary="t = -1 case of the reciprocal Euler sum"),
    IdentitySpec("cor_1_4_eq_1_18", negative_one_harmonic_bernoulli, free_vars=("x", "y"),
                 summary="t = -1 case of the reciprocal Bernoulli sum"),
    IdentitySpec("cor_1_5_eq_1_19", harmonic_euler_first, free_vars=("x", "y"),
                 summary="harmonic-weighted Euler convolution (first form)"),
    IdentitySpec("cor_1_5_eq_1_20", harmonic_euler_second, free_vars=("x", "y"),
                 summary="harmonic-weighted Euler convolution (second form)"),
    IdentitySpec("cor_1_5_eq_1_21", harmonic_bernoulli, free_vars=("x", "y"),
                 summary="harmonic-weighted Bernoulli convolution"),
    IdentitySpec("miki", miki, **_N4, summary="Miki's identity"),
    IdentitySpec("matiyasevich", matiyasevich, **_N4, summary="Matiyasevich's identity"),
    IdentitySpec("eq_3_3", limit_euler_bernoulli, free_vars=("x", "y"),
                 summary="t -> 0 value of the Euler convolution"),
    IdentitySpec("lemma_2_2", dual_sequence_lemma, free_vars=("x", "y", "r", "s"),
                 summary="dual-sequence lemma for a fixed rational sequence"),
    IdentitySpec("lemma_3_1", binomial_difference_limit, free_vars=("s",),
                 domain=lambda n: n >= 0, domain_text="n >= 0", poles=lambda n: {"s": range(n)},
                 summary="derivative of C(s+t, n) at t = 0"),
]

CATALOG = {spec.name: spec for spec in _SPECS}


def get_spec(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownIdentity(name) from None


def normalize_indices(spec, indices):
    """Accept an int (for single-index identities) or a mapping of index values."""
    if isinstance(indices, int):
        if len(spec.indices) != 1:
            raise IndexOutOfDomain("%s needs indices %s" % (spec.name, ", ".join(spec.indices)))
        indices = {spec.indices[0]: indices}
    missing = [k for k in spec.indices if k not in indices]
    if missing:
        raise IndexOutOfDomain("%s needs indices %s" % (spec.name, ", ".join(missing)))
    return {k: int(indices[k]) for k in spec.indices}


def build_identity(name, indices, alg=None):
    """Both sides of a catalog identity, as RatFuns with constraints substituted."""
    from .ratfun import RatFun

    spec = get_spec(name)
    idx = normalize_indices(spec, indices)
    if not spec.in_domain(idx):
        raise IndexOutOfDomain("%s is defined for %s, not %s" % (name, spec.domain_text, _fmt_idx(idx)))
    alg = alg or SymbolicAlgebra()
    lhs, rhs = spec.build(alg, idx)
    return RatFun(lhs) if not isinstance(lhs, RatFun) else lhs, RatFun(rhs) if not isinstance(rhs, RatFun) else rhs


def _fmt_idx(idx):
    return ", ".join("%s=%d" % kv for kv in idx.items())


def index_grid(spec, ranges):
    """Cartesian product of per-index ranges, filtered by the domain, in order.

    Missing ranges default as follows: ``m`` follows ``n``; ``l`` spans
    ``0..max(n)`` and the domain filter trims it.
    """
    ranges = {k: list(v) for k, v in ranges.items() if v is not None}
    n_range = ranges.get("n", [])
    if "m" in spec.indices and "m" not in ranges:
        ranges["m"] = n_range
    if "l" in spec.indices and "l" not in ranges:
        top = max(n_range + ranges.get("m", [])) if (n_range or ranges.get("m")) else -1
        ranges["l"] = list(range(0, top + 1))
    for k in spec.indices:
        ranges.setdefault(k, [])
    order = spec.indices
    out = []
    for combo in product(*(ranges[k] for k in order)):
        idx = dict(zip(order, combo))
        if spec.in_domain(idx):
            out.append(idx)
    return out
