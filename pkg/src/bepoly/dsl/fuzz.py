"""Random well-scoped trees for round-trip testing of the printer."""

import random

from . import nodes as N

_FREE = sorted(N.VARIABLE_NAMES)
_SUM_VARS = ("k", "j", "i", "kk")


def random_expr(rng=None, depth=4, scope=()):
    rng = rng or random.Random()
    if depth <= 0 or rng.random() < 0.2:
        return _leaf(rng, scope)
    choice = rng.randrange(12)
    sub = lambda: random_expr(rng, depth - 1, scope)  # noqa: E731
    if choice < 4:
        cls = (N.Add, N.Sub, N.Mul, N.Div)[choice]
        return cls(sub(), sub())
    if choice == 4:
        return N.Neg(sub())
    if choice == 5:
        return N.Pow(sub(), sub())
    if choice == 6:
        var = rng.choice(_SUM_VARS)
        body = random_expr(rng, depth - 1, scope + (var,))
        return N.Sum(var, sub(), sub(), body)
    cls, arity = N.FUNCTIONS[rng.choice(sorted(N.FUNCTIONS))]
    return cls(*(sub() for _ in range(arity)))


def _leaf(rng, scope):
    roll = rng.random()
    if roll < 0.3:
        return N.IntLit(rng.randrange(0, 30))
    if roll < 0.45:
        return N.RatLit(rng.randrange(0, 30), rng.randrange(1, 12))
    names = _FREE + list(scope)
    return N.Var(rng.choice(names))
