"""The acceptance suite, shared by ``bepoly selftest`` and the test-suite.

Each criterion returns a :class:`CriterionResult`.  Reference values come
from oracles that share no code with the library: the Akiyama-Tanigawa
algorithm for Bernoulli numbers, the Seidel boustrophedon for Euler numbers,
and plain ``math.comb`` sums for the closed number identities.
"""

import io
import os
import random
import tempfile
import time
from dataclasses import dataclass, field
from fractions import Fraction as F
from math import comb

from . import sequences
from .algebra import SymbolicAlgebra
from .arith import harmonic
from .catalog import (
    CATALOG, build_identity, harmonic_bernoulli, index_grid, m_bracket, miki, negative_one_euler,
    negative_one_harmonic_bernoulli, negative_one_harmonic_euler, t_bernoulli_reciprocal,
    t_euler_convolution, t_euler_reciprocal, limit_euler_bernoulli,
)
from .poly import AffineForm, MultiPoly, binom_poly
from .ratfun import RatFun, limit_at
from .verify import verify_identity, verify_lemma_3_1, verify_range


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    def check(self, ok, message):
        if not ok:
            self.passed = False
            self.failures.append(message)
        return ok

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = "[%s] criterion %d: %s (%.2fs)" % (status, self.number, self.title, self.seconds)
        if self.failures:
            text += " -- " + "; ".join(self.failures[:3])
            if len(self.failures) > 3:
                text += "; ... %d more" % (len(self.failures) - 3)
        return text


# -- oracles --------------------------------------------------------------

def akiyama_tanigawa(count):
    """B_0..B_{count-1} with the B_1 = -1/2 convention."""
    out = []
    row = []
    for m in range(count):
        row.append(F(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if count > 1:
        out[1] = -out[1]
    return out


def seidel_euler(count):
    """E_0..E_{count-1} from the boustrophedon zigzag numbers."""
    zigzag = [1]
    row = [1]
    for _ in range(1, count):
        nxt = [0]
        for v in reversed(row):
            nxt.append(nxt[-1] + v)
        row = nxt
        zigzag.append(row[-1])
    return [F((-1) ** (n // 2) * zigzag[n]) if n % 2 == 0 else F(0) for n in range(count)]


_B_TABLE = []


def _oracle_b(n):
    if len(_B_TABLE) <= n:
        _B_TABLE[:] = akiyama_tanigawa(max(n + 1, 2 * len(_B_TABLE), 64))
    return _B_TABLE[n]


def brute_remark_b(n):
    b = _oracle_b
    lhs = sum(comb(n, k) ** 2 * b(k) * b(n - k) for k in range(2, n - 1))
    lhs -= 2 * sum(comb(n, k) * comb(n + k - 1, k) * b(k) * b(n - k) for k in range(2, n - 1))
    return lhs, 2 * comb(2 * n - 1, n - 1) * b(n)


def brute_miki(n):
    b = _oracle_b
    h = sum(F(1, j) for j in range(1, n + 1))
    lhs = sum(b(k) * b(n - k) / (k * (n - k)) for k in range(2, n - 1))
    lhs -= sum(comb(n, k) * b(k) * b(n - k) / (k * (n - k)) for k in range(2, n - 1))
    return lhs, 2 * h * b(n) / n


def brute_matiyasevich(n):
    b = _oracle_b
    lhs = (n + 2) * sum(b(k) * b(n - k) for k in range(2, n - 1))
    lhs -= 2 * sum(comb(n + 2, k) * b(k) * b(n - k) for k in range(2, n - 1))
    return lhs, n * (n + 1) * b(n)


# -- helpers ----------------------------------------------------------------

def _cap(hi, quick):
    return min(hi, 6) if quick else hi


def _all_hold(result, name, ranges, mode="symbolic"):
    reports = verify_range(name, ranges, mode)
    bad = [r.indices for r in reports if not r.holds]
    result.check(not bad, "%s fails at %s" % (name, bad[:3]))
    result.check(bool(reports), "%s: no instances in range" % name)
    return reports


def _rat(v):
    return v if isinstance(v, RatFun) else RatFun(v)


def _equal(a, b):
    return _rat(a) == _rat(b)


# -- criteria -----------------------------------------------------------------

def criterion_1(quick=False):
    r = CriterionResult(1, "Bernoulli/Euler recurrences and initial values")
    t0 = time.perf_counter()
    cache = sequences.SequenceCache()
    bs = [cache.bernoulli_number(n) for n in range(61)]
    es = [cache.euler_number(n) for n in range(41)]
    r.seconds = time.perf_counter() - t0
    for n in range(1, 61):
        r.check(sequences.bernoulli_recurrence_residual(bs, n) == 0, "B recurrence fails at n=%d" % n)
    for n in range(1, 41):
        r.check(sequences.euler_recurrence_residual(es, n) == 0, "E recurrence fails at n=%d" % n)
    r.check(bs[:5] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)], "B_0..B_4 = %s" % bs[:5])
    r.check(bs == akiyama_tanigawa(61), "B_n disagrees with the Akiyama-Tanigawa oracle")
    r.check(es == seidel_euler(41), "E_n disagrees with the Seidel oracle")
    r.check(r.seconds < 1.0, "took %.2fs, limit 1s" % r.seconds)
    return r


def criterion_2(quick=False):
    top = _cap(10, quick)
    r = CriterionResult(2, "two-parameter convolution theorem, n <= %d" % top)
    t0 = time.perf_counter()
    for name in ("thm_1_1_i", "thm_1_1_ii"):
        _all_hold(r, name, {"n": range(1, top + 1)})
    elapsed = time.perf_counter() - t0
    x, y, s, t = (AffineForm.from_poly(MultiPoly.var(v)) for v in "xyst")
    half = F(1, 2)
    expected = MultiPoly.var("t") * (MultiPoly.var("x") - half) - MultiPoly.var("s") * (MultiPoly.var("y") - half)
    r.check(m_bracket(1, s, t, x, y) == expected, "n=1 bracket is not t(x-1/2) - s(y-1/2)")
    lhs, rhs = build_identity("thm_1_1_ii", 1)
    r.check(lhs.is_zero() and rhs.is_zero(), "n=1 cyclic relation does not expand to 0")
    r.seconds = elapsed
    r.check(elapsed < 30, "took %.1fs, limit 30s" % elapsed)
    return r


def criterion_3(quick=False):
    r = CriterionResult(3, "alpha and shifted-index corollaries, Euler/Bernoulli number remarks")
    t0 = time.perf_counter()
    top = _cap(8, quick)
    for name in ("cor_1_1_eq_1_4", "cor_1_1_eq_1_5", "cor_1_2_eq_1_6", "cor_1_2_eq_1_7",
                 "cor_1_2_eq_1_8", "cor_1_2_eq_1_9"):
        _all_hold(r, name, {"n": range(1, top + 1)})
    top = _cap(30, quick)
    for name in ("remark_1_3_E", "remark_1_3_B"):
        _all_hold(r, name, {"n": range(4, top + 1)})
    lhs, rhs = brute_remark_b(4)
    r.check(lhs == rhs == F(-7, 3), "brute-force n=4 gives %s vs %s" % (lhs, rhs))
    blhs, brhs = build_identity("remark_1_3_B", 4)
    r.check(blhs == lhs and brhs == rhs, "builder n=4 values differ from brute force")
    r.seconds = time.perf_counter() - t0
    return r


def criterion_4(quick=False):
    top = _cap(40, quick)
    r = CriterionResult(4, "Miki and Matiyasevich, 4 <= n <= %d" % top)
    t0 = time.perf_counter()
    for name in ("miki", "matiyasevich"):
        _all_hold(r, name, {"n": range(4, top + 1)})
    r.seconds = time.perf_counter() - t0
    for name, brute, value in (("miki", brute_miki, F(-5, 144)), ("matiyasevich", brute_matiyasevich, F(-2, 3))):
        lhs, rhs = build_identity(name, 4)
        ok = lhs.is_constant() and lhs.constant_value() == value and rhs.constant_value() == value
        r.check(ok, "%s n=4 gives %s = %s" % (name, lhs, rhs))
        r.check(brute(4) == (value, value), "%s brute force n=4 gives %s" % (name, brute(4)))
        for n in range(4, top + 1):
            bl, br = brute(n)
            cl, cr = build_identity(name, n)
            r.check(bl == br and cl == bl and cr == br, "%s n=%d disagrees with brute force" % (name, n))
    r.check(r.seconds < 5, "took %.2fs, limit 5s" % r.seconds)
    return r


def criterion_5(quick=False):
    r = CriterionResult(5, "three-index theorem and Woodcock's relation")
    t0 = time.perf_counter()
    top = _cap(6, quick)
    for name in ("thm_1_2_eq_1_10", "thm_1_2_eq_1_11", "thm_1_2_eq_1_12"):
        reports = _all_hold(r, name, {"n": range(1, top + 1), "m": range(1, top + 1)})
        expected = sum(min(m, n) for m in range(1, top + 1) for n in range(1, top + 1))
        r.check(len(reports) == expected, "%s: %d instances, expected %d" % (name, len(reports), expected))
    top = _cap(20, quick)
    _all_hold(r, "woodcock", {"n": range(1, top + 1), "m": range(1, top + 1)})
    r.seconds = time.perf_counter() - t0
    return r


def _at_minus_one(builder, n, **kw):
    return builder(SymbolicAlgebra(values={"t": -1}), n, **kw)


def criterion_6(quick=False):
    r = CriterionResult(6, "free-parameter theorem and its t = -1 specializations")
    t0 = time.perf_counter()
    top = _cap(8, quick)
    for name in ("thm_1_3_eq_1_13", "thm_1_3_eq_1_14", "thm_1_3_eq_1_15"):
        reports = _all_hold(r, name, {"n": range(1, top + 1)})
        r.check(all(rep.pole_set.get("t") for rep in reports), "%s reports lack a pole set" % name)
    for n in range(1, _cap(10, quick) + 1):
        sym = SymbolicAlgebra()
        # Euler convolution: sides swap, scaled by (-1)^n (n+1)
        tl, tr = _at_minus_one(t_euler_convolution, n)
        cl, cr = negative_one_euler(sym, n)
        c = (-1) ** n * (n + 1)
        r.check(_equal(cl, c * tr) and _equal(cr, c * tl), "t=-1 Euler convolution mismatch at n=%d" % n)
        # reciprocal Euler sum: sides swap with a sign
        tl, tr = _at_minus_one(t_euler_reciprocal, n)
        cl, cr = negative_one_harmonic_euler(sym, n)
        r.check(_equal(cl, -tr) and _equal(cr, -tl), "t=-1 reciprocal Euler mismatch at n=%d" % n)
        # reciprocal Bernoulli sum: first terms keep their side, second terms change side
        (l1, l2), (r1, r2) = _at_minus_one(t_bernoulli_reciprocal, n, parts=True)
        cl, cr = negative_one_harmonic_bernoulli(sym, n)
        c = (n + 1) * (-1) ** (n + 1)
        r.check(_equal(cl, c * (l1 - r2)) and _equal(cr, c * (r1 - l2)),
                "t=-1 reciprocal Bernoulli mismatch at n=%d" % n)
    r.seconds = time.perf_counter() - t0
    return r


def criterion_7(quick=False):
    r = CriterionResult(7, "limits: binomial derivative, harmonic limit, t -> 0 of the Euler convolution")
    t0 = time.perf_counter()
    for n in range(0, _cap(8, quick) + 1):
        r.check(verify_lemma_3_1(n).holds, "symbolic-s limit fails at n=%d" % n)
    for n in range(0, _cap(20, quick) + 1):
        f = RatFun(_binom_shift(n), MultiPoly.var("t"))
        value = limit_at(f, "t", 0)
        r.check(value == RatFun(-(-1) ** n * harmonic(n)), "s=-1 limit wrong at n=%d" % n)
        if n >= 1:
            r.check(verify_lemma_3_1(n, -1).holds, "lemma at s=-1 fails at n=%d" % n)
    for n in range(1, _cap(8, quick) + 1):
        tl, tr = t_euler_convolution(SymbolicAlgebra(), n)
        ql, qr = limit_euler_bernoulli(SymbolicAlgebra(), n)
        limit_l = limit_at(_rat(tl), "t", 0)
        limit_r = limit_at(_rat(tr), "t", 0)
        r.check(limit_l == _rat(qr) and limit_r == _rat(ql), "t -> 0 limit mismatch at n=%d" % n)
        r.check(verify_identity("eq_3_3", n).holds, "eq_3_3 builder fails at n=%d" % n)
    r.seconds = time.perf_counter() - t0
    return r


def _binom_shift(n):
    return binom_poly(MultiPoly.var("t") - 1, n) - (-1) ** n


def criterion_8(quick=False):
    r = CriterionResult(8, "harmonic-weighted corollary and its reduction to Miki")
    t0 = time.perf_counter()
    for name in ("cor_1_5_eq_1_19", "cor_1_5_eq_1_20", "cor_1_5_eq_1_21"):
        _all_hold(r, name, {"n": range(1, _cap(8, quick) + 1)})
    b = _oracle_b
    for n in range(4, _cap(12, quick) + 1):
        lhs, rhs = harmonic_bernoulli(SymbolicAlgebra(values={"x": 0, "y": 0}), n)
        ml, mr = miki(SymbolicAlgebra(), n)
        if n % 2 == 0:
            plain = sum(b(k) * b(n - k) / (k * (n - k)) for k in range(2, n - 1))
            binom_part = sum(comb(n, k) * b(k) * b(n - k) / (k * (n - k)) for k in range(2, n - 1))
            ok = (lhs == 2 * b(n) / n ** 2 + binom_part
                  and rhs == plain - 2 * harmonic(n - 1) * b(n) / n
                  and ml == plain - binom_part and mr == 2 * harmonic(n) * b(n) / n)
        else:
            ok = lhs == rhs == -b(n - 1) / (n - 1) and ml == mr == 0
        r.check(ok and ml == mr, "x=y=0 reduction does not give Miki at n=%d" % n)
    r.seconds = time.perf_counter() - t0
    return r


def criterion_9(quick=False):
    from .properties import run_properties

    r = CriterionResult(9, "operator and sequence property suites")
    t0 = time.perf_counter()
    for name, ok, detail in run_properties(random.Random(20240611), count=100):
        r.check(ok, "%s: %s" % (name, detail))
    r.seconds = time.perf_counter() - t0
    return r


def criterion_10(quick=False):
    from .dsl import load_bep, parse, render, shipped_files, shipped_path, verify_bep
    from .dsl.fuzz import random_expr

    r = CriterionResult(10, "DSL transcriptions and printer round-trip")
    t0 = time.perf_counter()
    required = ("miki", "matiyasevich", "thm_1_1_ii", "cor_1_2_eq_1_9")
    names = required if quick else shipped_files()
    r.check(set(required) <= set(shipped_files()), "missing shipped transcriptions")
    for name in names:
        bep = load_bep(shipped_path(name))
        for idx in index_grid(CATALOG[name], {"n": range(1, _cap(8, quick) + 1)}):
            dsl = verify_bep(bep, idx)
            cat = verify_identity(name, idx)
            r.check(dsl.holds and cat.holds, "%s %s: dsl=%s catalog=%s" % (name, idx, dsl.holds, cat.holds))
    rng = random.Random(1234)
    bad = 0
    for _ in range(1000):
        e = random_expr(rng, depth=5)
        try:
            if parse(render(e)) != e:
                bad += 1
        except Exception:  # any exception is a round-trip failure
            bad += 1
    r.check(bad == 0, "%d of 1000 fuzzed trees fail the round trip" % bad)
    r.seconds = time.perf_counter() - t0
    return r


def criterion_11(quick=False, subprocess_selftest=False):
    """CLI contract; the selftest-exits-0 part runs only when asked (it would recurse)."""
    from .cli import main

    r = CriterionResult(11, "command-line contract")
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        golden = os.path.join(tmp, "bernoulli.tsv")
        with open(golden, "w") as fh:
            fh.write("0\t1\n1\t-1/2\n2\t1/6\n3\t0\n4\t1/30\n")
        out, err = io.StringIO(), io.StringIO()
        code = main(["crosscheck", "bernoulli", "--golden", golden], out, err)
        r.check(code == 1, "corrupted golden file exits %d, expected 1" % code)
        r.check("n=4" in out.getvalue(), "mismatch at n=4 not listed")
        with open(golden, "w") as fh:
            fh.write("4\t-1/30\n")
        code = main(["crosscheck", "bernoulli", "--golden", golden], io.StringIO(), io.StringIO())
        r.check(code == 0, "correct golden file exits %d" % code)
    top = "3" if quick else "8"
    outputs = []
    for jobs in ("1", "8"):
        out = io.StringIO()
        code = main(["verify", "--all", "--n", "1.." + top, "--jobs", jobs], out, io.StringIO())
        r.check(code == 0, "verify --all --jobs %s exits %d" % (jobs, code))
        outputs.append(out.getvalue().encode())
    r.check(outputs[0] == outputs[1] and outputs[0], "JSON differs between --jobs 1 and --jobs 8")
    if subprocess_selftest:
        import subprocess
        import sys

        args = [sys.executable, "-m", "bepoly", "selftest"] + (["--quick"] if quick else [])
        proc = subprocess.run(args, capture_output=True, text=True)
        r.check(proc.returncode == 0, "selftest exits %d" % proc.returncode)
    r.seconds = time.perf_counter() - t0
    return r


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11)


def run_all(quick=False, out=None):
    results = []
    for fn in CRITERIA:
        res = fn(quick=quick)
        results.append(res)
        if out is not None:
            out.write(res.line() + "\n")
            out.flush()
    return results
