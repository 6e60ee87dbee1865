from fractions import Fraction as F

import pytest

from bepoly import PoleError, binom_rational, format_rational, harmonic, parse_rational, rising_reciprocal_sum


@pytest.mark.parametrize("z, k, expected", [
    (5, 2, 10),
    (-1, 3, -1),
    (F(1, 2), 2, F(-1, 8)),
    (F(7, 3), 0, 1),
    (4, -1, 0),
    (3, 5, 0),
])
def test_binom_rational(z, k, expected):
    assert binom_rational(z, k) == expected


def test_negative_one_binomials_are_signs():
    assert [binom_rational(-1, k) for k in range(6)] == [1, -1, 1, -1, 1, -1]


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (4, F(25, 12))])
def test_harmonic(n, expected):
    assert harmonic(n) == expected


@pytest.mark.parametrize("s, n, expected", [
    (-1, 2, F(-3, 2)),
    (5, 1, F(1, 5)),
    (2, 2, F(3, 2)),
    (F(1, 2), 0, 0),
])
def test_rising_reciprocal_sum(s, n, expected):
    assert rising_reciprocal_sum(s, n) == expected


@pytest.mark.parametrize("s", [0, 1, 2])
def test_rising_reciprocal_sum_pole(s):
    with pytest.raises(PoleError):
        rising_reciprocal_sum(s, 3)


def test_rational_text_form():
    assert format_rational(F(-1, 30)) == "-1/30"
    assert format_rational(F(5)) == "5"
    assert parse_rational("-1/30") == F(-1, 30)
    assert parse_rational(" 7 ") == 7
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_results_are_reduced():
    q = binom_rational(F(6, 4), 2)
    assert (q.numerator, q.denominator) == (3, 8)
