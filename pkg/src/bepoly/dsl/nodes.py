"""AST of the identity language.  Nodes are frozen, so equality is structural."""

from dataclasses import dataclass


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class RatLit(Expr):
    num: int
    den: int


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Expr


@dataclass(frozen=True)
class Binom(Expr):
    upper: Expr
    lower: Expr


@dataclass(frozen=True)
class B(Expr):
    index: Expr
    arg: Expr


@dataclass(frozen=True)
class E(Expr):
    index: Expr
    arg: Expr


@dataclass(frozen=True)
class Bnum(Expr):
    index: Expr


@dataclass(frozen=True)
class Enum(Expr):
    index: Expr


@dataclass(frozen=True)
class H(Expr):
    index: Expr


@dataclass(frozen=True)
class Sum(Expr):
    var: str
    lo: Expr
    hi: Expr
    body: Expr


@dataclass(frozen=True)
class KDelta(Expr):
    a: Expr
    b: Expr


#: names a free variable may take; summation variables may be any identifier
VARIABLE_NAMES = frozenset("x y z r s t a n k l m".split())

#: call name -> (node class, arity)
FUNCTIONS = {
    "B": (B, 2),
    "E": (E, 2),
    "Bnum": (Bnum, 1),
    "Enum": (Enum, 1),
    "H": (H, 1),
    "binom": (Binom, 2),
    "kdelta": (KDelta, 2),
}

CALL_NAMES = {cls: name for name, (cls, _) in FUNCTIONS.items()}
