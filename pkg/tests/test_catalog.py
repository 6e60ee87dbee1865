import random
from fractions import Fraction as F

import pytest

from bepoly import (
    AffineForm, IndexOutOfDomain, LengthError, MultiPoly, PoleError, RatFun, UnknownIdentity, bernoulli_number,
    build_identity, m_bracket, verify_identity, verify_lemma_2_2, verify_lemma_3_1, verify_range,
)
from bepoly.algebra import SymbolicAlgebra
from bepoly.catalog import CATALOG, bracket, get_spec, index_grid, t_bernoulli_reciprocal

x, y, r, s, t = (MultiPoly.var(v) for v in "xyrst")
half = F(1, 2)


def test_bracket_first_order():
    assert m_bracket(1, s, t, x, y) == t * (x - half) - s * (y - half)


def test_bracket_antisymmetric_specialization():
    assert m_bracket(1, s, t, x, x) == (t - s) * (x - half)


def test_bracket_accepts_affine_forms():
    z = AffineForm(1, {"x": -1, "y": -1})
    assert m_bracket(2, s, t, x, z) == m_bracket(2, s, t, x, 1 - x - y)
    with pytest.raises(IndexOutOfDomain):
        m_bracket(0, s, t, x, y)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bracket_relation_is_cyclically_invariant(n):
    z = 1 - x - y
    tt = n - r - s
    terms = [r * m_bracket(n, s, tt, x, y), s * m_bracket(n, tt, r, y, z), tt * m_bracket(n, r, s, z, x)]
    assert sum(terms, MultiPoly.const(0)).is_zero()
    # (r,s,t),(x,y,z) -> (s,t,r),(y,z,x): the same three terms in rotated order
    rot = [s * m_bracket(n, tt, r, y, z), tt * m_bracket(n, r, s, z, x), r * m_bracket(n, s, tt, x, y)]
    assert rot == terms[1:] + terms[:1]
    lhs, rhs = build_identity("thm_1_1_ii", n)
    assert lhs == RatFun(sum(terms, MultiPoly.const(0))) and rhs == RatFun(0)


def test_build_identity_examples():
    assert build_identity("miki", 4) == (RatFun(F(-5, 144)), RatFun(F(-5, 144)))
    assert build_identity("matiyasevich", 4) == (RatFun(F(-2, 3)), RatFun(F(-2, 3)))
    assert build_identity("eq_3_3", 1) == (RatFun(-half), RatFun(-half))


def test_remark_bernoulli_n4_brute_force():
    b = bernoulli_number
    from math import comb
    n = 4
    lhs = sum(comb(n, k) ** 2 * b(k) * b(n - k) for k in range(2, n - 1))
    lhs -= 2 * sum(comb(n, k) * comb(n + k - 1, k) * b(k) * b(n - k) for k in range(2, n - 1))
    assert lhs == F(-7, 3) == 2 * comb(7, 3) * b(4)
    assert build_identity("remark_1_3_B", 4) == (RatFun(lhs), RatFun(lhs))


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        build_identity("no_such_identity", 3)
    with pytest.raises(UnknownIdentity):
        get_spec("thm_9")


@pytest.mark.parametrize("name", ["miki", "matiyasevich", "remark_1_3_B"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_small_n_is_out_of_domain(name, n):
    with pytest.raises(IndexOutOfDomain):
        build_identity(name, n)
    with pytest.raises(IndexOutOfDomain):
        verify_identity(name, n)


def test_index_domains():
    with pytest.raises(IndexOutOfDomain):
        build_identity("cor_1_2_eq_1_7", {"n": 3, "l": 3})
    with pytest.raises(IndexOutOfDomain):
        build_identity("thm_1_2_eq_1_10", {"l": 3, "m": 2, "n": 5})
    assert verify_identity("woodcock", {"m": 2, "n": 2}).holds


def test_verify_report_shape():
    rep = verify_identity("thm_1_1_ii", 3)
    d = rep.to_dict()
    assert list(d) == ["identity", "indices", "mode", "holds", "witness", "ms"]
    assert d["holds"] is True and d["witness"] is None and d["ms"] is None
    timed = verify_identity("thm_1_1_ii", 3, timing=True)
    assert isinstance(timed.to_dict()["ms"], float)


def test_pole_sets_recorded():
    assert verify_identity("thm_1_3_eq_1_13", 3).to_dict()["pole_set"] == {"t": ["0", "1", "2", "3"]}
    assert verify_identity("thm_1_3_eq_1_14", 3).to_dict()["pole_set"] == {"t": ["0", "1", "2"]}


def test_verify_range_examples():
    reps = verify_range("miki", {"n": range(4, 13)})
    assert len(reps) == 9 and all(r.holds for r in reps)
    reps = verify_range("cor_1_2_eq_1_7", {"n": range(1, 9)})
    assert len(reps) == sum(range(1, 9)) and all(r.holds for r in reps)
    assert verify_range("miki", {"n": range(5, 5)}) == []
    assert verify_range("miki", {"n": range(1, 4)}) == []


def test_index_grid_orders_deterministically():
    grid = list(index_grid(CATALOG["thm_1_2_eq_1_10"], {"n": range(1, 4)}))
    assert grid == sorted(grid, key=lambda d: (d["l"], d["m"], d["n"]))
    assert list(index_grid(CATALOG["cor_1_2_eq_1_7"], {"n": range(1, 3)})) == [
        {"n": 1, "l": 0}, {"n": 2, "l": 0}, {"n": 2, "l": 1}]
    assert all(1 <= d["l"] <= min(d["m"], d["n"]) for d in grid)


def test_sampled_and_symbolic_agree_small():
    for name, spec in CATALOG.items():
        if name in ("lemma_2_2",):
            continue
        for idx in list(index_grid(spec, {"n": range(0, 4)}))[:3]:
            a = verify_identity(name, idx, mode="symbolic")
            b = verify_identity(name, idx, mode="sampled")
            assert a.holds == b.holds is True, (name, idx)


def test_sampled_mode_finds_witness_for_false_identity():
    from bepoly.verify import decide
    rep = decide("broken", {"n": 2}, lambda alg: (alg.B(2, alg.var("x")), alg.B(2, alg.var("y"))), "sampled")
    assert not rep.holds and rep.witness["residual"] != "0"


def test_t_minus_one_term_relation():
    sym = SymbolicAlgebra(values={"t": -1})
    (l1, l2), (r1, r2) = t_bernoulli_reciprocal(sym, 3, parts=True)
    lhs, rhs = build_identity("cor_1_4_eq_1_18", 3)
    c = 4  # (n+1)(-1)^(n+1) at n = 3
    assert lhs == RatFun(c * (l1 - r2))
    assert rhs == RatFun(c * (r1 - l2))


def test_lemma_2_2_examples(rng):
    assert verify_lemma_2_2(1, [1, 0]).holds
    bern = [(-1) ** l * bernoulli_number(l) for l in range(4)]
    assert verify_lemma_2_2(3, bern).holds
    assert verify_lemma_2_2(2, [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]).holds
    with pytest.raises(LengthError):
        verify_lemma_2_2(3, [1, 2])


def test_lemma_3_1_examples():
    assert verify_lemma_3_1(0).holds
    assert verify_lemma_3_1(0, 5).holds
    assert verify_lemma_3_1(2, -1).holds
    assert verify_lemma_3_1(3).holds
    assert verify_lemma_3_1(4, F(7, 2)).holds
    with pytest.raises(PoleError):
        verify_lemma_3_1(3, 1)
