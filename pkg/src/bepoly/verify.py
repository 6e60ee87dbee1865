"""Deciding identities and reporting the outcome.

Two modes:

``symbolic``
    expand both sides exactly and test whether the cross-multiplied
    difference is the zero polynomial.
``sampled``
    evaluate both sides at every point of a product grid whose size in each
    variable exceeds the degree bound of the cross-multiplied difference.  A
    polynomial vanishing on such a grid is zero, so a passing sampled run is
    as conclusive as a symbolic one.

Grid values are integers, ascending from ``max(indices) + 1`` and skipping
declared poles.
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import DegreeAlgebra, NumericAlgebra, SymbolicAlgebra, cross_degree, ensure_no_pole
from .arith import format_rational
from .catalog import get_spec, index_grid, normalize_indices
from .errors import IndexOutOfDomain, LengthError, PoleError
from .poly import VARIABLES
from .ratfun import RatFun

MODES = ("symbolic", "sampled")

# how many times a grid is shifted past an unexpected pole before giving up
_POLE_RETRIES = 4


@dataclass
class IdentityReport:
    identity: str
    indices: dict
    mode: str
    holds: bool
    witness: dict = None
    ms: float = None
    pole_set: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "identity": self.identity,
            "indices": dict(self.indices),
            "mode": self.mode,
            "holds": self.holds,
            "witness": self.witness,
            "ms": self.ms,
        }
        if self.pole_set:
            out["pole_set"] = {v: [format_rational(q) for q in vals] for v, vals in self.pole_set.items()}
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    def __bool__(self):
        return self.holds


def _as_ratfun(value):
    return value if isinstance(value, RatFun) else RatFun(value)


def _degree_bounds(build):
    lhs, rhs = build(DegreeAlgebra())
    bounds = cross_degree(lhs, rhs)
    return {v: d for v, d in zip(VARIABLES, bounds) if d > 0}


def _axis(start, size, excluded):
    values = []
    q = start
    while len(values) < size:
        if q not in excluded:
            values.append(Fraction(q))
        q += 1
    return values


def _grid(bounds, start, poles):
    """Axis values per variable; each axis has bound + 1 points."""
    return {v: _axis(start, d + 1, set(poles.get(v, ()))) for v, d in bounds.items()}


def _residual_at(build, point):
    lhs, rhs = ensure_no_pole(lambda: build(NumericAlgebra(point)))
    return Fraction(lhs) - Fraction(rhs)


def _points(axes, start):
    names = list(axes)
    filler = {v: Fraction(start) for v in VARIABLES}
    for combo in product(*(axes[v] for v in names)):
        point = dict(filler)
        point.update(zip(names, combo))
        yield {v: point[v] for v in names}, point


def _witness(shown, residual):
    return {
        "assignment": {v: format_rational(q) for v, q in shown.items()},
        "residual": format_rational(residual),
    }


def _sample(build, bounds, start, poles):
    """Return (holds, witness) by grid evaluation; shifts the grid past stray poles."""
    for _ in range(_POLE_RETRIES):
        axes = _grid(bounds, start, poles)
        try:
            for shown, point in _points(axes, start):
                residual = _residual_at(build, point)
                if residual:
                    return False, _witness(shown, residual)
            return True, None
        except PoleError:
            start = max([start] + [a[-1] for a in axes.values()]) + 1
    raise PoleError("sample grid could not avoid the poles of the expression")


def decide(name, indices, build, mode="symbolic", poles=None, timing=False):
    """Decide ``lhs == rhs`` for ``build(alg) -> (lhs, rhs)`` and return a report."""
    if mode not in MODES:
        raise ValueError("mode must be one of %s" % ", ".join(MODES))
    poles = poles or {}
    start = max(list(indices.values()) + [0]) + 1
    t0 = time.perf_counter()
    if mode == "symbolic":
        lhs, rhs = ensure_no_pole(lambda: build(SymbolicAlgebra()))
        holds = _as_ratfun(lhs).cross_difference(_as_ratfun(rhs)).is_zero()
        witness = None
        if not holds:
            _, witness = _sample(build, _degree_bounds(build), start, poles)
    else:
        holds, witness = _sample(build, _degree_bounds(build), start, poles)
    ms = round((time.perf_counter() - t0) * 1000, 3) if timing else None
    return IdentityReport(name, dict(indices), mode, holds, witness, ms, dict(poles))


# -- catalog ------------------------------------------------------------------

def verify_identity(name, indices, mode="symbolic", timing=False):
    spec = get_spec(name)
    idx = normalize_indices(spec, indices)
    if not spec.in_domain(idx):
        raise IndexOutOfDomain("%s is defined for %s" % (name, spec.domain_text))
    if name == "lemma_3_1":
        return verify_lemma_3_1(idx["n"], mode=mode, timing=timing)
    return decide(name, idx, lambda alg: spec.build(alg, idx), mode, spec.pole_set(idx), timing)


def _verify_job(args):
    return verify_identity(*args)


def verify_range(name, ranges, mode="symbolic", jobs=1, timing=False):
    """Reports for every in-domain index tuple of the given ranges, in index order."""
    spec = get_spec(name)
    grid = index_grid(spec, ranges)
    jobs_args = [(name, idx, mode, timing) for idx in grid]
    if jobs <= 1 or len(jobs_args) <= 1:
        return [_verify_job(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, jobs_args, chunksize=1))


# -- lemmas -------------------------------------------------------------------

def verify_lemma_2_2(n, a, mode="symbolic", timing=False):
    """Check the dual-sequence convolution lemma for the sequence ``a``."""
    from .catalog import dual_sequence_lemma

    if n < 1:
        raise IndexOutOfDomain("the dual-sequence lemma needs n >= 1")
    a = [Fraction(v) for v in a]
    if len(a) < n + 1:
        raise LengthError("need %d sequence terms, got %d" % (n + 1, len(a)))
    return decide("lemma_2_2", {"n": n}, lambda alg: dual_sequence_lemma(alg, n, a), mode, timing=timing)


def verify_lemma_3_1(n, s=None, mode="symbolic", timing=False):
    """Check the derivative of C(s+t, n) at t = 0, plus its s = -1 harmonic form.

    ``s`` is symbolic when None; a rational ``s`` in {0..n-1} raises PoleError.
    """
    from .catalog import binomial_difference_limit, harmonic_limit

    if n < 0:
        raise IndexOutOfDomain("n must be nonnegative")
    poles = {"s": [Fraction(l) for l in range(n)]} if s is None else {}
    if s is not None and Fraction(s) in {Fraction(l) for l in range(n)}:
        raise PoleError("s = %s is a pole of the right-hand side" % format_rational(Fraction(s)))
    main = decide("lemma_3_1", {"n": n}, lambda alg: binomial_difference_limit(alg, n, s),
                  mode, poles, timing)
    special = decide("lemma_3_1", {"n": n}, lambda alg: harmonic_limit(alg, n), "symbolic")
    if main.holds and not special.holds:
        main.holds = False
        main.witness = dict(special.witness or {}, assignment={"s": "-1"})
    return main
