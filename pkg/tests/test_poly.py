from fractions import Fraction as F

import pytest

from bepoly import AffineForm, MultiPoly, PoleError, RatFun, bernoulli_poly, binom_poly, euler_poly, limit_at

x, y, r, s, t, a = (MultiPoly.var(v) for v in "xyrsta")


def test_ring_ops():
    assert (x + y) + (-y) == x
    assert (x - 1) * (x + 1) == x ** 2 - 1
    assert (x - x).is_zero()
    assert RatFun(1, t) + RatFun(1, t - 1) == RatFun(2 * t - 1, t * (t - 1))


def test_zero_has_no_terms():
    assert (x * 0).terms == {}
    assert MultiPoly.const(0) == MultiPoly.const(F(0, 5))


def test_canonical_rendering_is_deterministic():
    p = 3 * x ** 2 * y - F(1, 2) * t + a
    q = a - F(1, 2) * t + 3 * y * x ** 2
    assert str(p) == str(q)
    assert str(bernoulli_poly(2)) == "x^2 - x + 1/6"


def test_binom_poly():
    assert binom_poly(t, 2) == (t ** 2 - t) / 2
    assert binom_poly(AffineForm(-1, {}), 3) == -1
    n = 2
    assert binom_poly(a + n + 1, 1) == a + 3
    assert binom_poly(s, 0) == 1


def test_substitute():
    assert (x ** 2).substitute("x", x + 1) == x ** 2 + 2 * x + 1
    assert (x * y).substitute("y", 1 - x - y) == x - x ** 2 - x * y
    n = 3
    assert t.substitute("t", AffineForm(n, {"r": -1, "s": -1})) == 3 - r - s


def test_affine_form_roundtrip():
    form = AffineForm.from_poly(1 - x - y)
    assert form.to_poly() == 1 - x - y
    with pytest.raises(ValueError):
        AffineForm.from_poly(x * y)


def test_derivative():
    assert (x ** 3).derivative("x") == 3 * x ** 2
    assert bernoulli_poly(3).derivative("x") == 3 * bernoulli_poly(2)
    assert (y ** 2).derivative("x").is_zero()


def test_difference_operators():
    assert bernoulli_poly(2).delta("x") == 2 * x
    assert euler_poly(2).delta_star("x") == 2 * x ** 2
    assert MultiPoly.const(7).delta("x").is_zero()


def test_ratfun_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFun(x, 0)


def test_ratfun_equality_by_cross_multiplication():
    assert RatFun(x * t - x, t ** 2 - t) == RatFun(x, t)
    assert RatFun(2 * x, 4) == RatFun(x, 2)
    assert RatFun(x, t) != RatFun(x, s)


def test_limit_harmonic_example():
    f = RatFun(binom_poly(t - 1, 2) - 1, t)
    assert limit_at(f, "t", 0) == RatFun(F(-3, 2))


def test_limit_removable():
    assert limit_at(RatFun(t, t), "t", 0) == RatFun(1)


def test_limit_symbolic_s():
    f = RatFun(binom_poly(s + t, 3) - binom_poly(s, 3), t)
    expected = RatFun(binom_poly(s, 3)) * (RatFun(1, s) + RatFun(1, s - 1) + RatFun(1, s - 2))
    assert limit_at(f, "t", 0) == expected


def test_limit_pole():
    with pytest.raises(PoleError):
        limit_at(RatFun(1, t), "t", 0)
    with pytest.raises(PoleError):
        limit_at(RatFun(t + 1, t ** 2), "t", 0)


def test_limit_at_nonzero_point():
    f = RatFun(t ** 2 - 4, t - 2)
    assert limit_at(f, "t", 2) == RatFun(4)
