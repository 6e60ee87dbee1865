"""Command-line front end (``bepoly`` / ``python -m bepoly``).

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage or I/O
error.
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import sequences
from .arith import format_rational
from .catalog import CATALOG, get_spec, index_grid
from .errors import BepolyError, DSLError, UnknownIdentity
from .verify import MODES, verify_identity

log = logging.getLogger("bepoly")

KINDS = ("bernoulli", "euler", "bpoly", "epoly", "e0")
GOLDEN_KINDS = ("bernoulli", "euler", "e0")
FORMATS = ("json", "tsv", "text")


class UsageError(Exception):
    pass


def parse_range(text):
    """``"A..B"`` or ``"A"`` -> range(A, B + 1)."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError("expected A..B with integers, got %r" % text) from None
    if b < a:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return range(a, b + 1)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text) from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser():
    p = argparse.ArgumentParser(prog="bepoly", description="Exact Bernoulli/Euler identities.")
    p.add_argument("--cache", metavar="DIR", help="persistent sequence cache (BEPOLY_CACHE overrides)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    c = sub.add_parser("compute", help="print numbers or polynomials")
    c.add_argument("kind", choices=KINDS)
    c.add_argument("--n", type=parse_range, required=True, metavar="A..B")
    c.add_argument("--format", choices=FORMATS, default="tsv")

    def ranges(q, n_required=True):
        q.add_argument("--n", type=parse_range, required=n_required, metavar="A..B")
        q.add_argument("--l", type=parse_range, metavar="A..B")
        q.add_argument("--m", type=parse_range, metavar="A..B")
        q.add_argument("--mode", choices=MODES, default="symbolic")
        q.add_argument("--format", choices=FORMATS, default="json")
        q.add_argument("--jobs", type=_positive, default=1)
        q.add_argument("--timing", action="store_true", help="record elapsed ms in reports")

    v = sub.add_parser("verify", help="verify catalog identities")
    v.add_argument("name", nargs="?")
    v.add_argument("--identity", dest="identity")
    v.add_argument("--all", action="store_true")
    ranges(v)

    x = sub.add_parser("crosscheck", help="compare computed values with a golden TSV")
    x.add_argument("kind", choices=GOLDEN_KINDS)
    x.add_argument("--golden", required=True, metavar="FILE")

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--quick", action="store_true", help="indices up to 6 only")

    k = sub.add_parser("check", help="verify a .bep identity file")
    k.add_argument("file")
    ranges(k)

    e = sub.add_parser("expr", help="verify LHS == RHS written in the DSL")
    e.add_argument("lhs")
    e.add_argument("rhs")
    e.add_argument("--let", action="append", default=[], metavar="VAR=EXPR")
    ranges(e, n_required=False)

    sub.add_parser("list", help="list catalog identities")
    return p


# -- helpers ------------------------------------------------------------------

def _value_rows(kind, n_range):
    for n in n_range:
        if kind == "bernoulli":
            yield n, format_rational(sequences.bernoulli_number(n))
        elif kind == "euler":
            yield n, format_rational(sequences.euler_number(n))
        elif kind == "e0":
            yield n, format_rational(sequences.euler_at_zero(n))
        elif kind == "bpoly":
            yield n, str(sequences.bernoulli_poly(n))
        else:
            yield n, str(sequences.euler_poly(n))


def _fmt_indices(idx):
    return ",".join("%s=%d" % kv for kv in idx.items())


def emit_reports(reports, fmt, out):
    reports = list(reports)
    if fmt == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif fmt == "tsv":
        out.write("identity\tindices\tmode\tholds\tresidual\n")
        for r in reports:
            residual = r.witness["residual"] if r.witness else ""
            out.write("%s\t%s\t%s\t%s\t%s\n" % (r.identity, _fmt_indices(r.indices), r.mode,
                                                 "true" if r.holds else "false", residual))
    else:
        width = max([len(r.identity) for r in reports] + [8])
        for r in reports:
            status = "holds" if r.holds else "FAILS"
            line = "%-*s  %-16s  %-9s  %s" % (width, r.identity, _fmt_indices(r.indices), r.mode, status)
            if r.ms is not None:
                line += "  %.1f ms" % r.ms
            out.write(line + "\n")
        good = sum(r.holds for r in reports)
        out.write("%d of %d instances hold\n" % (good, len(reports)))
    return reports


def _finish(reports, err):
    for r in reports:
        if not r.holds:
            err.write("first failure: %s %s witness %s\n"
                      % (r.identity, _fmt_indices(r.indices), json.dumps(r.witness)))
            return 1
    return 0


def _run_job(job):
    kind, payload = job
    if kind == "catalog":
        name, idx, mode, timing = payload
        return verify_identity(name, idx, mode, timing)
    from .dsl.bep import verify_expr
    lhs, rhs, bindings, mode, name, timing = payload
    return verify_expr(lhs, rhs, bindings, mode, name=name, timing=timing)


def run_jobs(jobs, n_workers):
    """Reports in submission order whatever the degree of parallelism."""
    if n_workers <= 1 or len(jobs) <= 1:
        return [_run_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(n_workers, len(jobs))) as pool:
        return list(pool.map(_run_job, jobs, chunksize=1))


def _ranges(args):
    return {"n": args.n, "l": args.l, "m": args.m}


# -- commands -----------------------------------------------------------------

def cmd_compute(args, out, err):
    rows = list(_value_rows(args.kind, args.n))
    if args.format == "json":
        for n, value in rows:
            out.write(json.dumps({"kind": args.kind, "n": n, "value": value}) + "\n")
    elif args.format == "tsv":
        out.write("".join("%d\t%s\n" % row for row in rows))
    else:
        width = max(len(str(n)) for n, _ in rows)
        for n, value in rows:
            out.write("%*d  %s\n" % (width, n, value))
    return 0


def cmd_verify(args, out, err):
    names = []
    if args.all:
        if args.name or args.identity:
            raise UsageError("give either a name or --all, not both")
        names = list(CATALOG)
    else:
        name = args.identity or args.name
        if not name:
            raise UsageError("verify needs an identity name or --all")
        if args.identity and args.name and args.identity != args.name:
            raise UsageError("conflicting identity names %r and %r" % (args.name, args.identity))
        get_spec(name)
        names = [name]
    jobs = []
    for name in names:
        spec = get_spec(name)
        grid = index_grid(spec, _ranges(args))
        if not grid:
            err.write("%s: out of domain: no requested index satisfies %s; nothing to verify\n"
                      % (name, spec.domain_text))
            continue
        jobs.extend(("catalog", (name, idx, args.mode, args.timing)) for idx in grid)
    reports = emit_reports(run_jobs(jobs, args.jobs), args.format, out)
    return _finish(reports, err)


def cmd_crosscheck(args, out, err):
    try:
        with open(args.golden, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (args.golden, exc.strerror)) from None
    try:
        rows = sequences.parse_tsv(text)
    except ValueError as exc:
        raise UsageError("malformed golden file %s: %s" % (args.golden, exc)) from None
    if not rows:
        log.warning("golden file %s has no rows; nothing to compare", args.golden)
        out.write("0 values compared\n")
        return 0
    compute = {"bernoulli": sequences.bernoulli_number, "euler": sequences.euler_number,
               "e0": sequences.euler_at_zero}[args.kind]
    mismatches = []
    for n, golden in rows:
        ours = compute(n)
        if ours != golden:
            mismatches.append((n, ours, golden))
    for n, ours, golden in mismatches:
        out.write("mismatch %s n=%d: computed %s, golden %s\n"
                  % (args.kind, n, format_rational(ours), format_rational(golden)))
    out.write("%d values compared, %d mismatches\n" % (len(rows), len(mismatches)))
    return 1 if mismatches else 0


def cmd_selftest(args, out, err):
    from .acceptance import run_all

    results = run_all(quick=args.quick, out=out)
    failed = [r for r in results if not r.passed]
    out.write("selftest: %d of %d criteria passed\n" % (len(results) - len(failed), len(results)))
    return 1 if failed else 0


def _bep_jobs(path, args):
    from .dsl.bep import load_bep

    try:
        bep = load_bep(path)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None
    if bep.name in CATALOG:
        spec = CATALOG[bep.name]
        grid = index_grid(spec, _ranges(args))
        if not grid:
            err_note = "%s: no indices within the requested ranges satisfy %s" % (bep.name, spec.domain_text)
            return bep, [], err_note
    else:
        grid = _plain_grid(args)
    jobs = [("dsl", (bep.lhs, bep.rhs, bep.bindings(**idx), args.mode, bep.name, args.timing))
            for idx in grid]
    return bep, jobs, None


def _plain_grid(args):
    names = [k for k in ("l", "m", "n") if getattr(args, k) is not None]
    grid = [{}]
    for k in names:
        grid = [dict(g, **{k: v}) for g in grid for v in getattr(args, k)]
    return [{k: g[k] for k in sorted(g, key=("n", "l", "m").index)} for g in grid]


def cmd_check(args, out, err):
    _, jobs, note = _bep_jobs(args.file, args)
    if note:
        err.write(note + "; nothing to verify\n")
        return 0
    reports = emit_reports(run_jobs(jobs, args.jobs), args.format, out)
    return _finish(reports, err)


def cmd_expr(args, out, err):
    from .dsl.expand import Bindings, parse_let
    from .dsl.parser import parse

    lhs, rhs = parse(args.lhs), parse(args.rhs)
    lets = tuple(parse_let(text) for text in args.let)
    jobs = []
    for idx in _plain_grid(args):
        bindings = Bindings(idx.get("n"), idx.get("l"), idx.get("m"), lets)
        jobs.append(("dsl", (lhs, rhs, bindings, args.mode, "expr", args.timing)))
    reports = emit_reports(run_jobs(jobs, args.jobs), args.format, out)
    return _finish(reports, err)


def cmd_list(args, out, err):
    for name, spec in CATALOG.items():
        out.write("%-18s  %-22s  %s\n" % (name, spec.domain_text, spec.summary))
    return 0


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "crosscheck": cmd_crosscheck,
    "selftest": cmd_selftest,
    "check": cmd_check,
    "expr": cmd_expr,
    "list": cmd_list,
}


def _setup_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("bepoly: %(levelname)s: %(message)s"))
    root = logging.getLogger("bepoly")
    root.handlers[:] = [handler]
    root.setLevel(logging.INFO if verbose else logging.WARNING)
    root.propagate = False


def cache_dir(args):
    return os.environ.get("BEPOLY_CACHE") or args.cache


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    _setup_logging(args.verbose)
    directory = cache_dir(args)
    try:
        if directory:
            sequences.default_cache().load(directory)
        code = COMMANDS[args.command](args, out, err)
        if directory:
            sequences.default_cache().save(directory)
        return code
    except BrokenPipeError:
        # reader went away (e.g. piped into head); stay quiet
        sys.stdout = open(os.devnull, "w")
        return 0
    except (UsageError, UnknownIdentity, DSLError, BepolyError, OSError) as exc:
        err.write("bepoly: error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
