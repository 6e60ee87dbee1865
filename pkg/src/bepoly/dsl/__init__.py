"""A small language for Bernoulli/Euler convolution identities."""

from .bep import BepFile, load_bep, parse_bep, shipped_files, shipped_path, verify_bep, verify_expr
from .expand import Bindings, Expander, evaluate, expand, parse_let
from .nodes import (
    Add, B, Binom, Bnum, Div, E, Enum, Expr, H, IntLit, KDelta, Mul, Neg, Pow, RatLit, Sub, Sum, Var,
)
from .parser import parse, render, tokenize

__all__ = [
    "BepFile", "Bindings", "Expander", "evaluate", "expand", "load_bep", "parse", "parse_bep",
    "parse_let", "render", "shipped_files", "shipped_path", "tokenize", "verify_bep", "verify_expr",
    "Add", "B", "Binom", "Bnum", "Div", "E", "Enum", "Expr", "H", "IntLit", "KDelta", "Mul", "Neg",
    "Pow", "RatLit", "Sub", "Sum", "Var",
]
