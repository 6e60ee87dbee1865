import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bepoly import (
    DivisionByZeroPolynomial, DSLError, MultiPoly, NonIntegerIndex, ParseError, RatFun, UnboundIndex,
    bernoulli_poly, verify_identity,
)
from bepoly.dsl import (
    B, Bindings, Binom, Mul, Pow, Sum, Var, IntLit, Add, expand, load_bep, parse, parse_bep, parse_let, render,
    shipped_files, shipped_path, verify_bep, verify_expr,
)
from bepoly.dsl.fuzz import random_expr

x, y = MultiPoly.var("x"), MultiPoly.var("y")


def test_parse_call():
    assert parse("B(2,x)") == B(IntLit(2), Var("x"))


def test_parse_bracket_sum():
    e = parse("Sum(k=0..n, (-1)^k * binom(s,k) * binom(t,n-k) * B(n-k,x) * B(k,y))")
    assert isinstance(e, Sum) and e.var == "k"
    assert isinstance(e.body, Mul)


def test_precedence():
    assert parse("1 + 2*x^3") == Add(IntLit(1), Mul(IntLit(2), Pow(Var("x"), IntLit(3))))
    assert expand(parse("-x^2"), Bindings()) == RatFun(-x ** 2)
    assert expand(parse("(2^3)^2"), Bindings()) == RatFun(64)
    with pytest.raises(ParseError):
        parse("2^3^2")


def test_rational_atom_binds_tighter_than_power():
    # INT "/" INT is a single atom: 4^1/2 is 4 to the power 1/2
    with pytest.raises(NonIntegerIndex):
        expand(parse("4^1/2"), Bindings())
    assert expand(parse("(4^1)/2"), Bindings()) == RatFun(2)


def test_parse_error_at_end_of_input():
    with pytest.raises(ParseError) as info:
        parse("Sum(k=0..n,")
    assert "end of input" in str(info.value)
    assert info.value.line == 1 and info.value.column == 12
    assert info.value.expected


@pytest.mark.parametrize("text", ["B(2)", "binom(x)", "foo(1)", "x +", "(x", "1 2", "Sum(0..n, k)", "w + 1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_position_on_second_line():
    with pytest.raises(ParseError) as info:
        parse("x +\n  * y")
    assert (info.value.line, info.value.column) == (2, 3)


def test_summation_variable_does_not_escape():
    with pytest.raises(ParseError):
        parse("Sum(j=0..n, j) + j")
    assert parse("Sum(j=0..n, Sum(j=0..j, j))")


def test_expand_examples():
    assert expand(parse("B(2,x)"), Bindings(n=7)) == RatFun(bernoulli_poly(2))
    assert expand(parse("H(n)"), Bindings(n=4)) == RatFun(F(25, 12))
    assert expand(parse("Sum(k=1..0, B(k,x))"), Bindings(n=3)) == RatFun(0)


def test_kdelta_in_bounds():
    e = parse("Sum(k=kdelta(l,0)..2, 1)")
    assert expand(e, Bindings(n=3, l=0)) == RatFun(2)
    assert expand(e, Bindings(n=3, l=1)) == RatFun(3)


def test_let_substitution():
    b = Bindings(lets=(parse_let("z = 1 - x - y;"),))
    assert expand(parse("B(1,z)"), b) == RatFun(F(1, 2) - x - y)


def test_unbound_names():
    with pytest.raises(UnboundIndex):
        expand(parse("B(n,x)"), Bindings())
    with pytest.raises(UnboundIndex):
        expand(parse("z + 1"), Bindings())


def test_non_integer_index():
    with pytest.raises(NonIntegerIndex):
        expand(parse("B(x,y)"), Bindings())
    with pytest.raises(NonIntegerIndex):
        expand(parse("B(n/2,x)"), Bindings(n=3))
    with pytest.raises(NonIntegerIndex):
        expand(parse("x^(n-5)"), Bindings(n=3))


def test_division_by_zero_polynomial():
    with pytest.raises(DivisionByZeroPolynomial):
        expand(parse("x/(y - y)"), Bindings())
    with pytest.raises(DivisionByZeroPolynomial):
        expand(parse("1/(n - 3)"), Bindings(n=3))


def test_bad_constraints():
    with pytest.raises(DSLError):
        Bindings(lets=(("n", parse("3")),))
    with pytest.raises(DSLError):
        Bindings(lets=(("z", parse("x*y")),))
    with pytest.raises(DSLError):
        expand(parse("z"), Bindings(lets=(("z", "w"),)))


def test_verify_expr_examples():
    assert verify_expr("B(n,0)", "Bnum(n)", Bindings(n=9)).holds
    report = verify_expr("E(n,x)", "E(n,y)", Bindings(n=2))
    assert not report.holds
    assert report.witness["residual"] != "0"
    assert set(report.witness["assignment"]) <= {"x", "y"}


def test_miki_typed_in_dsl_matches_catalog():
    lhs = ("Sum(k=2..n-2, Bnum(k)*Bnum(n-k)/(k*(n-k)))"
           " - Sum(k=2..n-2, binom(n,k)*Bnum(k)*Bnum(n-k)/(k*(n-k)))")
    rhs = "2*H(n)*Bnum(n)/n"
    assert verify_expr(lhs, rhs, Bindings(n=6)).holds
    assert verify_identity("miki", 6).holds


def test_shipped_transcriptions_cover_catalog():
    from bepoly.catalog import CATALOG
    expected = set(CATALOG) - {"lemma_2_2", "lemma_3_1"}
    assert set(shipped_files()) == expected


@pytest.mark.parametrize("name", ["miki", "matiyasevich", "thm_1_1_ii", "cor_1_2_eq_1_9", "thm_1_3_eq_1_13"])
def test_shipped_files_verify(name):
    from bepoly.catalog import CATALOG, index_grid
    bep = load_bep(shipped_path(name))
    spec = CATALOG[name]
    for idx in index_grid(spec, {"n": range(1, 6)}):
        assert verify_bep(bep, idx, poles=spec.pole_set(idx)).holds, idx


def test_bep_format_errors():
    with pytest.raises(ParseError):
        parse_bep("lhs: x\n")
    with pytest.raises(ParseError):
        parse_bep("let z = 1 - x - y\nlhs: z\nrhs: z\n")
    with pytest.raises(ParseError) as info:
        parse_bep("# c\nlhs: x\nrhs: (y\n")
    assert info.value.line == 3


def test_bep_continuation_and_comments():
    bep = parse_bep("# note\nlet z = 1 - x - y;\nlhs: x +\n  y  # tail\nrhs: 1 - z\n", "demo")
    assert bep.comments == ["note"]
    assert verify_bep(bep, {}).holds


def test_render_examples():
    assert render(parse("(n + 1)^2/8")) == render(parse("(n+1)^2/8"))
    assert parse(render(parse("((n + 1)^2)/8"))) == parse("((n + 1)^2)/8")
    assert parse(render(parse("x - (y - 1)"))) == parse("x - (y - 1)")
    assert parse(render(parse("-(-x)"))) == parse("-(-x)")


def test_round_trip_fuzz():
    rng = random.Random(7)
    for _ in range(1500):
        e = random_expr(rng, depth=5)
        assert parse(render(e)) == e, render(e)


# -- homomorphism on evaluable trees ---------------------------------------

_leaves = st.one_of(
    st.integers(-5, 5).map(lambda v: parse(str(v)) if v >= 0 else parse("(%d)" % v)),
    st.sampled_from(["x", "y", "t", "1/2", "B(2,x)", "E(1,y)", "binom(t,2)", "H(n)", "1/(t + 2)"]).map(parse),
)


def _combine(children):
    return st.one_of(
        st.builds(lambda a, b: parse("(%s) + (%s)" % (render(a), render(b))), children, children),
        st.builds(lambda a, b: parse("(%s) * (%s)" % (render(a), render(b))), children, children),
        st.builds(lambda a: parse("Sum(k=0..2, k*(%s))" % render(a)), children),
    )


_trees = st.recursive(_leaves, _combine, max_leaves=6)


@settings(max_examples=100, deadline=None)
@given(_trees, _trees)
def test_expand_is_a_homomorphism(e1, e2):
    b = Bindings(n=3)
    left, right = expand(e1, b), expand(e2, b)
    assert expand(parse("(%s) + (%s)" % (render(e1), render(e2))), b) == left + right
    assert expand(parse("(%s) * (%s)" % (render(e1), render(e2))), b) == left * right
