from fractions import Fraction as F

import pytest

from bepoly import (
    LengthError, MultiPoly, SequenceCache, a_poly, a_poly_star, bernoulli_number, bernoulli_poly, dual_sequence,
    euler_at_zero, euler_number, euler_poly,
)
from bepoly.sequences import parse_tsv, render_tsv

x = MultiPoly.var("x")


@pytest.mark.parametrize("n, expected", [(0, 1), (1, F(-1, 2)), (2, F(1, 6)), (3, 0), (4, F(-1, 30)),
                                         (12, F(-691, 2730))])
def test_bernoulli_number(n, expected):
    assert bernoulli_number(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (2, -1), (3, 0), (4, 5), (6, -61), (10, -50521)])
def test_euler_number(n, expected):
    assert euler_number(n) == expected


def test_polynomials():
    assert bernoulli_poly(2) == x ** 2 - x + F(1, 6)
    assert euler_poly(1) == x - F(1, 2)
    assert bernoulli_poly(0) == 1
    assert euler_poly(3) == x ** 3 - F(3, 2) * x ** 2 + F(1, 4)


@pytest.mark.parametrize("n", range(12))
def test_boundary_values(n):
    assert bernoulli_poly(n).value({"x": 0}) == bernoulli_number(n)
    assert euler_poly(n).value({"x": F(1, 2)}) == euler_number(n) / F(2) ** n


@pytest.mark.parametrize("n, expected", [(0, 1), (1, F(-1, 2)), (3, F(1, 4))])
def test_euler_at_zero(n, expected):
    assert euler_at_zero(n) == expected


def test_euler_at_zero_via_bernoulli():
    for n in range(1, 20):
        assert euler_at_zero(n) == 2 * (1 - 2 ** (n + 1)) * bernoulli_number(n + 1) / (n + 1)


def test_dual_sequence():
    assert dual_sequence([1, 0, 0, 0]) == [1, 1, 1, 1]
    assert dual_sequence([1, F(1, 2), F(1, 6), 0]) == [1, F(1, 2), F(1, 6), 0]
    assert dual_sequence([]) == []


def test_a_poly():
    t = MultiPoly.var("t")
    assert a_poly(1, [1, F(-1, 2)], "t") == t + F(1, 2)
    assert a_poly(0, [1, 5, 7]) == 1
    bern = [(-1) ** l * bernoulli_number(l) for l in range(8)]
    for k in range(8):
        assert a_poly(k, bern) == bernoulli_poly(k) == a_poly_star(k, bern)


def test_a_poly_length_error():
    with pytest.raises(LengthError):
        a_poly(3, [1, 2, 3])
    with pytest.raises(LengthError):
        a_poly_star(2, [1])


def test_fresh_cache_matches_default():
    cache = SequenceCache()
    assert [cache.bernoulli_number(n) for n in range(30)] == [bernoulli_number(n) for n in range(30)]
    assert cache.euler_poly(5) == euler_poly(5)


def test_cache_persistence_roundtrip(tmp_path):
    cache = SequenceCache()
    cache.bernoulli_number(20)
    cache.euler_number(10)
    cache.save(str(tmp_path))
    fresh = SequenceCache()
    assert fresh.load(str(tmp_path)) == 2
    assert fresh.bernoulli_numbers[:21] == cache.bernoulli_numbers[:21]


def test_corrupted_cache_is_discarded(tmp_path, caplog):
    (tmp_path / "bernoulli.tsv").write_text("0\t1\n1\t1/2\n2\t1/6\n")
    cache = SequenceCache()
    assert cache.load(str(tmp_path)) == 0
    assert "rebuilding" in caplog.text
    assert cache.bernoulli_number(1) == F(-1, 2)


def test_tsv_roundtrip():
    rows = [(0, F(1)), (1, F(-1, 2))]
    assert parse_tsv(render_tsv(rows)) == rows
    with pytest.raises(ValueError):
        parse_tsv("0 1\n")
