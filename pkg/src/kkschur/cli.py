"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import poset, tables
from .cores import LevelContext, bounded_of_shape, check_bounded, core_shape, word
from .errors import KSchurError, NotDivisible
from .partitions import parse_partition, union
from .rectangles import RectangleMultiset
from .ring import Basis, SymFunc, convert, divide_exact, g, multiply, pieri_kk
from .theorems import CONJECTURES, REGISTRY, Bounds, scan, verify
from .theorems.conjectures import minindex


class UsageError(Exception):
    pass


def _partition(ctx: LevelContext, text: str):
    try:
        lam = parse_partition(text)
    except ValueError as e:
        raise UsageError(f"bad partition {text!r}: {e}")
    check_bounded(ctx, lam)
    return lam


def _symfunc(ctx: LevelContext, text: str | None, empty: bool) -> SymFunc:
    """A partition means the basis element; JSON (or ``@file``) is read as a SymFunc."""
    if empty:
        return g(ctx)
    if text is None:
        raise UsageError("missing operand")
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        try:
            f = SymFunc.from_json(text, k=ctx.k, basis=Basis.KKSCHUR)
        except (ValueError, KeyError) as e:
            raise UsageError(f"bad SymFunc JSON: {e}")
        if f.k != ctx.k:
            raise UsageError(f"operand has k={f.k}, expected {ctx.k}")
        return convert(ctx, f, Basis.KKSCHUR)
    return g(ctx, _partition(ctx, text))


def _emit(args, payload, text: str | None = None):
    if args.pretty and text is not None:
        print(text)
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _fail(kind: str, reason: str, code: int, **extra) -> int:
    print(json.dumps({"error": kind, "reason": reason, **extra}, separators=(",", ":")), file=sys.stderr)
    return code


def _bounds(args) -> Bounds:
    try:
        return Bounds(args.max_size, args.max_total, args.max_mult, args.override)
    except ValueError as e:
        raise UsageError(str(e))


# Verbs ---------------------------------------------------------------------

def cmd_core(ctx, args):
    c = core_shape(ctx, _partition(ctx, args.lam))
    _emit(args, list(c), " ".join(map(str, c)) or "(empty)")


def cmd_bdd(ctx, args):
    lam = bounded_of_shape(ctx, parse_partition(args.core))
    _emit(args, list(lam), " ".join(map(str, lam)) or "(empty)")


def cmd_word(ctx, args):
    w = word(ctx, _partition(ctx, args.lam))
    _emit(args, list(w), " ".join(f"s{i}" for i in w) or "(identity)")


def cmd_expand(ctx, args):
    src, dst = Basis[args.source.upper()], Basis[args.target.upper()]
    f = SymFunc.basis_element(ctx.k, src, _partition(ctx, args.lam))
    out = convert(ctx, f, dst)
    _emit(args, out.to_json(), out.pretty())


def cmd_multiply(ctx, args):
    out = multiply(ctx, _symfunc(ctx, args.f, args.f_empty), _symfunc(ctx, args.g, args.g_empty))
    _emit(args, out.to_json(), out.pretty())


def cmd_quotient(ctx, args):
    if args.P is not None:
        P = RectangleMultiset.parse(ctx.k, args.P)
        lam = _partition(ctx, args.lam or "")
        num, den = g(ctx, union(P.partition(), lam)), g(ctx, P.partition())
    else:
        if args.num is None or args.den is None:
            raise UsageError("quotient needs --num and --den, or --P with --lambda")
        num, den = _symfunc(ctx, args.num, False), _symfunc(ctx, args.den, False)
    out = divide_exact(ctx, num, den)
    _emit(args, out.to_json(), out.pretty())


def cmd_pieri(ctx, args):
    out = pieri_kk(ctx, _partition(ctx, args.lam), args.r)
    _emit(args, out.to_json(), out.pretty())


def _statement_ids(args, default):
    ids = args.statement or default
    if ids == ["all"]:
        ids = list(REGISTRY)
    unknown = [s for s in ids if s not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown statement(s): {', '.join(unknown)}")
    return ids


def cmd_verify(ctx, args):
    results = [verify(ctx, sid, _bounds(args), args.jobs) for sid in _statement_ids(args, ["all"])]
    lines = [f"{'PASS' if v.passed else 'FAIL'}  {v.statement:<28} checked={v.checked:<6} "
             f"counterexamples={len(v.counterexamples)}  {v.elapsed * 1000:.0f} ms" for v in results]
    _emit(args, [v.to_json() for v in results], "\n".join(lines))
    return 0 if all(v.passed for v in results) else 1


def cmd_scan(ctx, args):
    report = args.report
    if report is None:
        base = os.environ.get("KKSCHUR_CACHE_DIR", ".")
        os.makedirs(base, exist_ok=True)
        report = os.path.join(base, f"scan_k{ctx.k}.jsonl")
    results = scan(ctx, _statement_ids(args, CONJECTURES), _bounds(args), report, args.jobs, args.limit)
    payload = {"report": report, "results": [v.to_json() for v in results]}
    lines = [f"{v.statement:<28} checked={v.checked:<6} counterexamples={len(v.counterexamples)}" for v in results]
    _emit(args, payload, "\n".join([f"report: {report}", *lines]))
    if args.strict and not all(v.passed for v in results):
        return 1
    return 0


def cmd_minindex(ctx, args):
    m = minindex(ctx, _partition(ctx, args.lam), args.t)
    if "mu" not in m:
        _emit(args, {k: (list(v) if isinstance(v, tuple) else v) for k, v in m.items()}, m["failure"])
        return 1
    mu = m["mu"]
    c = core_shape(ctx, mu)
    _emit(args, {"mu": list(mu), "core": list(c)}, f"mu={list(mu)} core={list(c)}")
    return 0


def cmd_table1(ctx, args):
    if args.json:
        print(json.dumps(tables.table1_json(ctx), separators=(",", ":")))
    else:
        sys.stdout.write(tables.table1_text(ctx))


def cmd_table2(ctx, args):
    if args.json:
        print(json.dumps(tables.table2_json(ctx, args.max_size), separators=(",", ":")))
    else:
        sys.stdout.write(tables.table2_text(ctx, args.max_size))


def cmd_poset_dot(ctx, args):
    text = poset.to_dot(ctx, args.max_size, args.order)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# Parser --------------------------------------------------------------------

def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kkschur", description="Exact K-k-Schur function computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_positive, required=True, help="level k >= 1")
    common.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    verb("core", cmd_core, "core of a bounded partition").add_argument("--lambda", dest="lam", required=True)
    verb("bdd", cmd_bdd, "bounded partition of a core").add_argument("--core", required=True)
    verb("word", cmd_word, "reduced word of residues").add_argument("--lambda", dest="lam", required=True)

    p = verb("expand", cmd_expand, "change basis of a single basis element")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--from", dest="source", choices=["h", "kschur", "kkschur"], default="kkschur")
    p.add_argument("--to", dest="target", choices=["h", "kschur", "kkschur"], default="h")

    p = verb("multiply", cmd_multiply, "product in the K-k-Schur basis")
    for name in ("f", "g"):
        p.add_argument(f"--{name}", help="partition, SymFunc JSON, or @file")
        p.add_argument(f"--{name}-empty", action="store_true", help="use g of the empty partition")

    p = verb("quotient", cmd_quotient, "exact quotient in the K-k-Schur basis")
    p.add_argument("--num")
    p.add_argument("--den")
    p.add_argument("--P", help="rectangles such as 2^1,3^2; divides g(P u lambda) by g(P)")
    p.add_argument("--lambda", dest="lam")

    p = verb("pieri", cmd_pieri, "h_r times g_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--r", type=int, required=True)

    for name, fn, help_ in (("verify", cmd_verify, "check theorems exhaustively within bounds"),
                            ("scan", cmd_scan, "resumable conjecture scan with a JSONL report")):
        p = verb(name, fn, help_)
        p.add_argument("--statement", action="append", help="statement id (repeatable) or 'all'")
        p.add_argument("--max-size", type=int, default=6)
        p.add_argument("--max-total", type=int, default=2)
        p.add_argument("--max-mult", type=int, default=2)
        p.add_argument("--override", action="store_true", help="lift the hard search caps")
        p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--report", help="JSONL report; also the resume checkpoint")
    p.add_argument("--limit", type=int, help="check at most this many new instances")
    p.add_argument("--strict", action="store_true", help="exit 1 when a counterexample is found")

    p = verb("minindex", cmd_minindex, "minimal index of a rectangle quotient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--t", type=int, required=True)

    p = verb("table1", cmd_table1, "rectangle-union quotient table")
    p.add_argument("--json", action="store_true")
    p = verb("table2", cmd_table2, "minindex table")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--json", action="store_true")

    p = verb("poset-dot", cmd_poset_dot, "weak/strong Hasse diagram in DOT")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--order", choices=["weak", "strong", "both"], default="both")
    p.add_argument("--output", "-o")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb in ("verify", "scan"):
        try:
            Bounds.check_level(args.k, args.override)
        except ValueError as e:
            return _fail("UsageError", str(e), 2)
    ctx = LevelContext.for_level(args.k)
    try:
        code = args.fn(ctx, args)
    except NotDivisible as e:
        return _fail("NotDivisible", str(e), 1, residual=e.residual.to_json() if e.residual is not None else None)
    except UsageError as e:
        return _fail("UsageError", str(e), 2)
    except KSchurError as e:
        return _fail(type(e).__name__, str(e), 2)
    except (ValueError, OSError) as e:
        return _fail(type(e).__name__, str(e), 2)
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
