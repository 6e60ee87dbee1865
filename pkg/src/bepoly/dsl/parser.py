"""Tokenizer, recursive-descent parser and canonical printer.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | atom ("^" atom)?
    atom   := INT | INT "/" INT | IDENT | call | "(" expr ")"
    call   := NAME "(" expr ("," expr)* ")"
            | "Sum" "(" IDENT "=" expr ".." expr "," expr ")"

``INT "/" INT`` is a rational literal, so ``x/2/3`` means ``x/(2/3)``; the
printer emits parentheses wherever that reading would differ from the tree.
"""

import re
from dataclasses import dataclass

from ..errors import ParseError
from .nodes import (
    CALL_NAMES, FUNCTIONS, VARIABLE_NAMES,
    Add, Div, IntLit, Mul, Neg, Pow, RatLit, Sub, Sum, Var,
)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<INT>[0-9]+)
  | (?P<IDENT>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\.\.|[-+*/^(),=;])
""", re.VERBOSE)

_ATOM_START = ("INT", "IDENT", "(")
_FACTOR_START = _ATOM_START + ("-",)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self):
        return "end of input" if self.kind == "EOF" else repr(self.text)


def tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            if kind == "op":
                kind = m.group()
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        self.scope = []

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, offset=1):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        raise ParseError("unexpected %s" % tok.describe(), tok.line, tok.column, expected)

    def expect(self, kind):
        if self.tok.kind != kind:
            self.fail((kind,))
        tok = self.tok
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        if self.tok.kind != "EOF":
            self.fail(("+", "-", "*", "/", "^", "end of input"))
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.i += 1
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self):
        left = self.factor()
        while self.tok.kind in ("*", "/"):
            op = self.tok.kind
            self.i += 1
            right = self.factor()
            left = Mul(left, right) if op == "*" else Div(left, right)
        return left

    def factor(self):
        if self.tok.kind == "-":
            self.i += 1
            return Neg(self.factor())
        if self.tok.kind not in _ATOM_START:
            self.fail(_FACTOR_START)
        base = self.atom()
        if self.tok.kind == "^":
            self.i += 1
            if self.tok.kind not in _ATOM_START:
                self.fail(_ATOM_START)
            return Pow(base, self.atom())
        return base

    def atom(self):
        tok = self.tok
        if tok.kind == "INT":
            self.i += 1
            if self.tok.kind == "/" and self.peek().kind == "INT":
                den = self.peek()
                if int(den.text) == 0:
                    raise ParseError("zero denominator in rational literal", den.line, den.column)
                self.i += 2
                return RatLit(int(tok.text), int(den.text))
            return IntLit(int(tok.text))
        if tok.kind == "(":
            self.i += 1
            e = self.expr()
            if self.tok.kind != ")":
                self.fail((")", "+", "-", "*", "/", "^"))
            self.i += 1
            return e
        if tok.kind == "IDENT":
            if tok.text == "Sum":
                return self.sum_call()
            if tok.text in FUNCTIONS:
                return self.call()
            self.i += 1
            if tok.text not in VARIABLE_NAMES and tok.text not in self.scope:
                raise ParseError("unknown identifier %r" % tok.text, tok.line, tok.column,
                                 sorted(VARIABLE_NAMES) + sorted(FUNCTIONS) + ["Sum"])
            return Var(tok.text)
        self.fail(_ATOM_START)

    def call(self):
        name = self.expect("IDENT").text
        cls, arity = FUNCTIONS[name]
        self.expect("(")
        args = [self.expr()]
        while len(args) < arity:
            if self.tok.kind != ",":
                self.fail((",", "+", "-", "*", "/", "^"))
            self.i += 1
            args.append(self.expr())
        if self.tok.kind != ")":
            self.fail((")", "+", "-", "*", "/", "^"))
        self.i += 1
        return cls(*args)

    def sum_call(self):
        self.expect("IDENT")
        self.expect("(")
        var = self.expect("IDENT")
        if var.text in FUNCTIONS or var.text == "Sum":
            self.fail(("IDENT",), var)
        self.expect("=")
        lo = self.expr()
        self.expect("..")
        hi = self.expr()
        self.expect(",")
        self.scope.append(var.text)
        try:
            body = self.expr()
        finally:
            self.scope.pop()
        self.expect(")")
        return Sum(var.text, lo, hi, body)


def parse(text):
    """Parse an expression; raises ParseError with position and expected tokens."""
    return Parser(text).parse()


# -- printer -----------------------------------------------------------------

_EXPR, _TERM, _FACTOR, _ATOM = range(4)


def _level(e):
    if isinstance(e, (Add, Sub)):
        return _EXPR
    if isinstance(e, (Mul, Div)):
        return _TERM
    if isinstance(e, (Neg, Pow)):
        return _FACTOR
    return _ATOM


def _at(e, level):
    text = render(e)
    return text if _level(e) >= level else "(" + text + ")"


def render(e):
    """Canonical text; ``parse(render(e)) == e``."""
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, RatLit):
        return "%d/%d" % (e.num, e.den)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, (Add, Sub)):
        op = " + " if isinstance(e, Add) else " - "
        return _at(e.left, _EXPR) + op + _at(e.right, _TERM)
    if isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else "/"
        left, right = _at(e.left, _TERM), _at(e.right, _FACTOR)
        # "2/3" would read back as one rational literal
        if op == "/" and left[-1].isdigit() and right[0].isdigit():
            right = "(" + right + ")"
        return left + op + right
    if isinstance(e, Neg):
        return "-" + _at(e.operand, _FACTOR)
    if isinstance(e, Pow):
        return _at(e.base, _ATOM) + "^" + _at(e.exponent, _ATOM)
    if isinstance(e, Sum):
        return "Sum(%s=%s..%s, %s)" % (e.var, render(e.lo), render(e.hi), render(e.body))
    name = CALL_NAMES.get(type(e))
    if name is None:
        raise TypeError("not an expression node: %r" % (e,))
    fields = [getattr(e, f) for f in e.__dataclass_fields__]
    return "%s(%s)" % (name, ", ".join(render(f) for f in fields))
