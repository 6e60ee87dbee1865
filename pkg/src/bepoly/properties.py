"""Seeded property checks for the polynomial operators and the sequences.

``run_properties`` yields ``(name, ok, detail)`` triples; the randomized
checks each draw ``count`` instances.
"""

from fractions import Fraction as F

from . import sequences as S
from .arith import binom_rational, harmonic
from .poly import MultiPoly
from .ratfun import RatFun, limit_at

X = MultiPoly.var("x")


def random_rational(rng, size=9):
    return F(rng.randint(-size, size), rng.randint(1, size))


def random_poly(rng, variables=("x", "y"), max_degree=6, max_terms=6):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = {v: rng.randint(0, max_degree) for v in variables}
        if sum(exps.values()) > max_degree:
            continue
        terms.append((exps, random_rational(rng)))
    merged = {}
    for exps, c in terms:
        key = tuple(exps[v] for v in variables)
        merged[key] = merged.get(key, 0) + c
    return MultiPoly([(dict(zip(variables, k)), c) for k, c in merged.items() if c])


def random_nonzero_poly(rng, **kw):
    while True:
        p = random_poly(rng, **kw)
        if not p.is_zero():
            return p


def _first_failure(rng, count, check):
    for i in range(count):
        detail = check(rng)
        if detail:
            return False, "instance %d: %s" % (i, detail)
    return True, ""


# -- exact arithmetic -----------------------------------------------------

def _pascal(rng):
    z, k = random_rational(rng, 30), rng.randint(0, 12)
    if k and binom_rational(z, k) != binom_rational(z - 1, k) + binom_rational(z - 1, k - 1):
        return "Pascal fails at z=%s, k=%d" % (z, k)


def _upper_negation(rng):
    z, k = random_rational(rng, 30), rng.randint(0, 12)
    if binom_rational(-z, k) != (-1) ** k * binom_rational(z + k - 1, k):
        return "upper negation fails at z=%s, k=%d" % (z, k)


def _vandermonde(rng):
    r, t = random_rational(rng, 20), random_rational(rng, 20)
    n = rng.randint(0, 8)
    l = rng.randint(0, n)
    lhs = sum(binom_rational(r - l, k - l) * binom_rational(t, n - k) for k in range(l, n + 1))
    if lhs != binom_rational(r + t - l, n - l):
        return "Vandermonde fails at r=%s, t=%s, l=%d, n=%d" % (r, t, l, n)


def _harmonic_step(n):
    return n == 0 or harmonic(n) - harmonic(n - 1) == F(1, n)


# -- poly-core ------------------------------------------------------------

def _product_rules(rng):
    p, q = random_poly(rng), random_poly(rng)
    p1 = p.shift("x")
    if (p * q).delta("x") != p1 * q.delta("x") + p.delta("x") * q:
        return "delta(pq) rule fails for p=%s, q=%s" % (p, q)
    if (p * q).delta_star("x") != p1 * q.delta_star("x") - p.delta("x") * q:
        return "delta*(pq) rule fails for p=%s, q=%s" % (p, q)


def _difference_uniqueness(rng):
    p = random_poly(rng, variables=("x",))
    q = p + random_rational(rng)
    if p.delta("x") != q.delta("x"):
        return "adding a constant changed delta"
    if p.derivative("x") != q.derivative("x"):
        return "equal differences but different derivatives"
    # perturbed pairs must be told apart
    bump = random_nonzero_poly(rng, variables=("x",), max_degree=4)
    r = p + bump
    if r.delta_star("x") == p.delta_star("x"):
        return "perturbation %s invisible to delta*" % bump
    if r.derivative("x") != p.derivative("x") and r.delta("x") == p.delta("x"):
        return "perturbation %s invisible to delta" % bump


def _ratfun_equivalence(rng):
    f = RatFun(random_poly(rng, variables=("x", "t"), max_degree=3),
               random_nonzero_poly(rng, variables=("x", "t"), max_degree=3))
    h1 = random_nonzero_poly(rng, variables=("x", "t"), max_degree=2)
    h2 = random_nonzero_poly(rng, variables=("x", "t"), max_degree=2)
    g = RatFun(f.num * h1, f.den * h1)
    k = RatFun(g.num * h2, g.den * h2)
    other = RatFun(random_poly(rng, variables=("x", "t"), max_degree=3),
                   random_nonzero_poly(rng, variables=("x", "t"), max_degree=3))
    if not (f == f and g == f and f == g and g == k and f == k):
        return "equal fractions compare unequal: %s, %s, %s" % (f, g, k)
    if (f == other) != (other == f):
        return "equality is not symmetric"
    if f == other and not (g == other and k == other):
        return "equality is not transitive"


def _limit_matches_evaluation(rng):
    num = random_poly(rng, variables=("x", "t"), max_degree=4)
    den = random_nonzero_poly(rng, variables=("x", "t"), max_degree=3)
    c = random_rational(rng)
    at_c = den.evaluate({"t": c})
    if at_c.is_zero():
        return None
    f = RatFun(num, den)
    if limit_at(f, "t", c) != RatFun(num.evaluate({"t": c}), at_c):
        return "limit_at differs from evaluation at t=%s for %s" % (c, f)


# -- sequences --------------------------------------------------------------

def _deterministic(check, top):
    bad = [n for n in range(top + 1) if not check(n)]
    return (not bad), ("fails at n=%s" % bad[:5]) if bad else ""


def _reflection(n):
    one_minus_x = 1 - X
    return (S.bernoulli_poly(n).substitute("x", one_minus_x) == (-1) ** n * S.bernoulli_poly(n)
            and S.euler_poly(n).substitute("x", one_minus_x) == (-1) ** n * S.euler_poly(n))


def _difference(n):
    ok = S.euler_poly(n).delta_star("x") == 2 * X ** n
    if n >= 1:
        ok = ok and S.bernoulli_poly(n).delta("x") == n * X ** (n - 1)
    return ok


def _derivative(n):
    return (S.bernoulli_poly(n + 1).derivative("x") == (n + 1) * S.bernoulli_poly(n)
            and S.euler_poly(n + 1).derivative("x") == (n + 1) * S.euler_poly(n))


def _half_argument(k):
    return S.bernoulli_poly(k).value({"x": F(1, 2)}) == (F(2) ** (1 - k) - 1) * S.bernoulli_number(k)


def _euler_bernoulli_bridge(m):
    b = S.bernoulli_poly(m + 1)
    return (m + 1) * S.euler_poly(m) == 2 * (b - 2 ** (m + 1) * b.substitute("x", X * F(1, 2)))


def _boundary_bridge(m):
    if m == 0:
        return True
    return ((-1) ** m - 1) * S.euler_at_zero(m) == 4 * (2 ** (m + 1) - 1) * S.bernoulli_number(m + 1) / (m + 1)


def _remark_sequences(k):
    euler_seq = [(-1) ** l * S.euler_at_zero(l) for l in range(k + 1)]
    bern_seq = [(-1) ** l * S.bernoulli_number(l) for l in range(k + 1)]
    return (S.a_poly(k, euler_seq) == S.a_poly_star(k, euler_seq) == S.euler_poly(k)
            and S.a_poly(k, bern_seq) == S.a_poly_star(k, bern_seq) == S.bernoulli_poly(k))


def _self_dual(length=30):
    bern = [(-1) ** n * S.bernoulli_number(n) for n in range(length)]
    e0 = [(-1) ** n * S.euler_at_zero(n) for n in range(length)]
    return S.dual_sequence(bern) == bern and S.dual_sequence(e0) == e0


def _dual_involution(rng):
    a = [random_rational(rng) for _ in range(rng.randint(1, 12))]
    if S.dual_sequence(S.dual_sequence(a)) != a:
        return "dual(dual(a)) != a for a=%s" % a


RANDOMIZED = (
    ("Pascal rule", _pascal),
    ("upper negation", _upper_negation),
    ("Vandermonde convolution", _vandermonde),
    ("difference product rules", _product_rules),
    ("difference operators determine polynomials", _difference_uniqueness),
    ("rational-function equality is an equivalence", _ratfun_equivalence),
    ("limit equals evaluation off the poles", _limit_matches_evaluation),
    ("dual sequence is an involution", _dual_involution),
)

DETERMINISTIC = (
    ("harmonic differences", _harmonic_step, 100),
    ("reflection x -> 1-x", _reflection, 30),
    ("difference of B_n and sum of E_n", _difference, 30),
    ("derivatives", _derivative, 30),
    ("half-argument values", _half_argument, 30),
    ("Euler-Bernoulli bridge", _euler_bernoulli_bridge, 20),
    ("boundary values E_m(0)", _boundary_bridge, 20),
    ("A_k for the Bernoulli and Euler sequences", _remark_sequences, 20),
)


def run_properties(rng, count=100):
    for name, check in RANDOMIZED:
        ok, detail = _first_failure(rng, count, check)
        yield name, ok, detail
    for name, check, top in DETERMINISTIC:
        ok, detail = _deterministic(check, top)
        yield name, ok, detail
    yield "self-duality up to length 30", _self_dual(), ""
