import random
from fractions import Fraction as F

from hypothesis import assume, given, settings, strategies as st

from bepoly import MultiPoly, RatFun, binom_rational, dual_sequence, harmonic, limit_at
from bepoly.properties import random_nonzero_poly, random_poly, run_properties

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
seeds = st.integers(0, 2 ** 32 - 1)
many = settings(max_examples=100, deadline=None)


@many
@given(rationals, st.integers(0, 12))
def test_pascal(z, k):
    assert binom_rational(z, k) == binom_rational(z - 1, k) + binom_rational(z - 1, k - 1)


@many
@given(rationals, st.integers(0, 12))
def test_upper_negation(z, k):
    assert binom_rational(-z, k) == (-1) ** k * binom_rational(z + k - 1, k)


@many
@given(rationals, rationals, st.integers(0, 8), st.data())
def test_vandermonde(r, t, n, data):
    l = data.draw(st.integers(0, n))
    lhs = sum(binom_rational(r - l, k - l) * binom_rational(t, n - k) for k in range(l, n + 1))
    assert lhs == binom_rational(r + t - l, n - l)


def test_harmonic_steps():
    for n in range(1, 101):
        assert harmonic(n) - harmonic(n - 1) == F(1, n)


@many
@given(seeds)
def test_product_rules(seed):
    rng = random.Random(seed)
    p, q = random_poly(rng), random_poly(rng)
    assert (p * q).delta("x") == p.shift("x") * q.delta("x") + p.delta("x") * q
    assert (p * q).delta_star("x") == p.shift("x") * q.delta_star("x") - p.delta("x") * q


@many
@given(seeds, rationals)
def test_equal_differences_give_equal_derivatives(seed, c):
    p = random_poly(random.Random(seed), variables=("x",))
    q = p + c
    assert p.delta("x") == q.delta("x")
    assert p.derivative("x") == q.derivative("x")


@many
@given(seeds)
def test_forward_sum_is_injective(seed):
    rng = random.Random(seed)
    p = random_poly(rng, variables=("x",))
    bump = random_nonzero_poly(rng, variables=("x",), max_degree=4)
    assert (p + bump).delta_star("x") != p.delta_star("x")
    if bump.degree("x") >= 1:
        assert (p + bump).delta("x") != p.delta("x")


@many
@given(seeds)
def test_ratfun_equality_is_an_equivalence(seed):
    rng = random.Random(seed)
    kw = dict(variables=("x", "t"), max_degree=3)
    f = RatFun(random_poly(rng, **kw), random_nonzero_poly(rng, **kw))
    h1, h2 = random_nonzero_poly(rng, **kw), random_nonzero_poly(rng, **kw)
    g = RatFun(f.num * h1, f.den * h1)
    k = RatFun(g.num * h2, g.den * h2)
    assert f == f and f == g and g == f and g == k and f == k
    other = RatFun(random_poly(rng, **kw), random_nonzero_poly(rng, **kw))
    assert (f == other) == (other == f) == (k == other)


@many
@given(seeds, rationals)
def test_limit_is_evaluation_off_poles(seed, c):
    rng = random.Random(seed)
    num = random_poly(rng, variables=("x", "t"), max_degree=4)
    den = random_nonzero_poly(rng, variables=("x", "t"), max_degree=3)
    at_c = den.evaluate({"t": c})
    assume(not at_c.is_zero())
    assert limit_at(RatFun(num, den), "t", c) == RatFun(num.evaluate({"t": c}), at_c)


@many
@given(st.lists(rationals, max_size=15))
def test_dual_is_an_involution(a):
    assert dual_sequence(dual_sequence(a)) == a


def test_bundled_property_suite():
    results = list(run_properties(random.Random(3), count=100))
    assert len(results) >= 15
    failed = [(name, detail) for name, ok, detail in results if not ok]
    assert not failed
