"""``.bep`` identity files and DSL verification.

A file holds optional ``let var = expr;`` lines followed by ``lhs:`` and
``rhs:`` sections.  A section continues on following lines until the next
keyword; ``#`` starts a comment.
"""

import os
import re
from dataclasses import dataclass, field

from ..errors import ParseError
from ..verify import decide
from .expand import Bindings, Expander, parse_let
from .parser import parse

_KEYWORD = re.compile(r"^\s*(let\b|lhs\s*:|rhs\s*:)")


@dataclass
class BepFile:
    name: str
    lhs: object
    rhs: object
    lets: tuple = ()
    comments: list = field(default_factory=list)

    def bindings(self, **idx):
        return Bindings(idx.get("n"), idx.get("l"), idx.get("m"), self.lets)


def _strip_comment(line):
    return line.split("#", 1)[0]


def parse_bep(text, name="<string>"):
    sections = {}
    lets = []
    comments = []
    current = None
    start_line = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.strip().startswith("#"):
            comments.append(raw.strip()[1:].strip())
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _KEYWORD.match(line)
        if m is None:
            if current is None:
                raise ParseError("expected 'let', 'lhs:' or 'rhs:'", lineno, 1, ("let", "lhs:", "rhs:"))
            current.append(line)
            continue
        key = m.group(1).rstrip(": \t")
        body = line[m.end():]
        if key == "let":
            current = None
            body = body.strip()
            if not body.endswith(";"):
                raise ParseError("a let line must end with ';'", lineno, len(line.rstrip()) + 1, (";",))
            try:
                lets.append(parse_let(body))
            except ParseError as exc:
                raise ParseError(exc.message, lineno, exc.column, exc.expected) from None
            continue
        if key in sections:
            raise ParseError("duplicate '%s:' section" % key, lineno, 1)
        sections[key] = current = [body]
        start_line[key] = lineno
    for key in ("lhs", "rhs"):
        if key not in sections:
            raise ParseError("missing '%s:' section" % key, len(text.splitlines()) + 1, 1, (key + ":",))
    trees = {}
    for key, lines in sections.items():
        try:
            trees[key] = parse("\n".join(lines))
        except ParseError as exc:
            # report positions relative to the file; the keyword shifts column 1 only
            raise ParseError(exc.message, exc.line + start_line[key] - 1, exc.column, exc.expected) from None
    return BepFile(name, trees["lhs"], trees["rhs"], tuple(lets), comments)


def load_bep(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_bep(text, os.path.splitext(os.path.basename(path))[0])


def _tree(value):
    return parse(value) if isinstance(value, str) else value


def verify_expr(lhs, rhs, bindings=None, mode="symbolic", name="expr", poles=None, timing=False):
    """Decide ``lhs == rhs`` (strings or ASTs) under ``bindings``."""
    lhs, rhs = _tree(lhs), _tree(rhs)
    bindings = bindings or Bindings()

    def build(alg):
        ex = Expander(alg, bindings)
        return ex.eval(lhs, {}), ex.eval(rhs, {})

    return decide(name, bindings.integers(), build, mode, poles, timing)


def verify_bep(bep, indices, mode="symbolic", poles=None, timing=False):
    if isinstance(bep, str):
        bep = load_bep(bep)
    return verify_expr(bep.lhs, bep.rhs, bep.bindings(**indices), mode, name=bep.name, poles=poles, timing=timing)


def shipped_dir():
    return os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "identities")


def shipped_files():
    """Names of the bundled identity transcriptions."""
    d = shipped_dir()
    return sorted(f[:-4] for f in os.listdir(d) if f.endswith(".bep"))


def shipped_path(name):
    return os.path.join(shipped_dir(), name + ".bep")
