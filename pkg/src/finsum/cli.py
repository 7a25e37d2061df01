"""Command-line front end.

Subcommands: ``verify`` (identity documents against their expected verdicts),
``transform`` (print/verify Beta, derivative, and central transforms),
``corpus run`` (the whole shipped library), ``eval`` (exact expression
evaluation).  Exit codes: 0 expectations met, 1 mismatch, 2 usage error,
3 load error, 4 shape error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import beta, corpus, dsl
from .errors import (DivisionByZero, DslSyntaxError, EvalTypeError,
                     FinsumError, FormatError, PoleError, ShapeError,
                     UnboundVariable)
from .field import HalfInt
from .model import admissible, load_identity

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LOAD, EXIT_SHAPE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_grid(text):
    """Half-integer grid syntax: comma list and/or a..b[:step] ranges."""
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo_text, _, rest = piece.partition("..")
            hi_text, _, step_text = rest.partition(":")
            step = Fraction(step_text) if step_text else Fraction(1)
            if step not in (Fraction(1, 2), Fraction(1)):
                raise UsageError(f"grid step must be 1/2 or 1, got {step}")
            lo = Fraction(lo_text)
            hi = Fraction(hi_text)
            x = lo
            while x <= hi:
                values.append(HalfInt.from_value(x))
                x += step
        else:
            try:
                values.append(corpus.parse_half(piece))
            except (ValueError, EvalTypeError) as exc:
                raise UsageError(f"bad grid value {piece!r}: {exc}") from None
    if not values:
        raise UsageError(f"empty grid {text!r}")
    return values


def _load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot load {path}: {exc}") from exc


def _grid_spec_from_args(args):
    spec = {}
    for name in ("r", "s", "u", "v"):
        text = getattr(args, name, None)
        if text is not None:
            spec[name] = [str(v) for v in parse_grid(text)]
    if "s" in spec:
        for v in spec["s"]:
            if Fraction(v) == 0:
                raise UsageError("inadmissible parameter s = 0")
    for name in ("r", "s"):
        for v in spec.get(name, ()):
            h = corpus.parse_half(v)
            if h.is_negative_integer:
                raise UsageError(f"inadmissible parameter {name} = {v}")
    return spec


def _entry_overrides(document, args):
    document = dict(document)
    if args.n:
        values = parse_grid(args.n)
        ints = [v.as_int() for v in values]
        document["n"] = [min(ints), max(ints)]
    spec = _grid_spec_from_args(args)
    if spec:
        document["grid"] = spec
    return document


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args):
    reports = []
    for path in args.paths:
        entry = corpus.load_entry(_entry_overrides(_load_document(path), args))
        reports.append(corpus.run_entry(entry))
    _emit_reports(reports, args.format)
    return EXIT_OK if all(r.matched for r in reports) else EXIT_MISMATCH


def _emit_reports(reports, fmt):
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
        return
    width = max((len(r.name) for r in reports), default=4)
    for r in reports:
        flag = "ok " if r.matched else "FAIL"
        line = f"{flag} {r.name:<{width}} expected={r.expected} actual={r.actual}"
        if r.detail:
            line += f"  [{r.detail}]"
        print(line)
    bad = sum(1 for r in reports if not r.matched)
    print(f"{len(reports)} entr{'y' if len(reports) == 1 else 'ies'}, {bad} mismatched")


# ---------------------------------------------------------------------------
# transform

def _render_side(side):
    parts = []
    for sm in side.summands:
        parts.append(f"sum(k={dsl.render(sm.lower)}..{dsl.render(sm.upper)}) {sm.term.render()}")
    if side.extra is not None:
        parts.append(dsl.render(side.extra))
    return "  +  ".join(parts) if parts else "0"


def _print_cid(cid):
    print(f"# {cid.provenance}")
    print(f"lhs: {_render_side(cid.lhs)}")
    print(f"rhs: {_render_side(cid.rhs)}")


def cmd_transform(args):
    document = _load_document(args.path)
    identity = load_identity(document)
    if args.negate_t:
        from .model import substitute_neg_t
        identity = substitute_neg_t(identity)
    ops = [op.strip() for op in args.op.split(",") if op.strip()]
    if not ops:
        raise UsageError("no transform operation given")

    produced = [identity]
    for op in ops:
        next_stage = []
        for obj in produced:
            if op == "beta":
                next_stage.append(beta.beta_transform(obj))
            elif op in ("dds", "ddr"):
                if not isinstance(obj, beta.ClosedIdentity):
                    raise ShapeError("dds/ddr need a transformed identity (use beta first)")
                next_stage.append(beta.differentiate(obj, op[2]))
            elif op == "central_v":
                next_stage.extend(beta.central_transform_v(obj, _int_param(args.v, "v")))
            elif op == "central_uv":
                next_stage.append(beta.central_transform_uv(
                    obj, _int_param(args.u, "u"), _int_param(args.v, "v")))
            else:
                raise UsageError(f"unknown transform op {op!r}")
        produced = next_stage

    exit_code = EXIT_OK
    grid_spec = _grid_spec_from_args(args)
    for cid in produced:
        _print_cid(cid)
        if args.check:
            n_values = [v.as_int() for v in parse_grid(args.n)] if args.n else list(range(0, 9))
            if grid_spec:
                grid = corpus._build_grid(grid_spec)
            elif any(sm.term.factors for side in (cid.lhs, cid.rhs) for sm in side.summands):
                grid = corpus._build_grid({"r": ["1/2", "1", "3/2", "2"], "s": ["1/2", "1", "3/2", "2"]})
            else:
                grid = ({},)
            report = beta.verify_closed(cid, n_values, grid)
            verdict = "equal" if report.all_equal and not report.undefined else "NOT equal"
            print(f"check: {verdict} over n={n_values[0]}..{n_values[-1]}, {len(grid)} grid point(s)")
            if report.failures:
                p = report.failures[0]
                print(f"  first failure at n={p.n} {dict(p.params)}: {p.lhs} vs {p.rhs}")
            if report.undefined:
                p = report.undefined[0]
                print(f"  undefined at n={p.n} {dict(p.params)}: {p.error}")
            if not report.all_equal or report.undefined:
                exit_code = EXIT_MISMATCH
    return exit_code


def _int_param(text, name):
    if text is None:
        raise UsageError(f"transform needs --{name}")
    value = corpus.parse_half(text)
    if not value.is_nonneg_integer:
        raise UsageError(f"--{name} must be a nonnegative integer")
    return value.as_int()


# ---------------------------------------------------------------------------
# corpus run

def cmd_corpus(args):
    if args.action != "run":
        raise UsageError(f"unknown corpus action {args.action!r}")
    names = set(args.name) if args.name else None
    reports = corpus.run_corpus(directory=args.corpus_dir, names=names,
                                status=args.status, jobs=args.jobs)
    _emit_reports(reports, args.format)
    return EXIT_OK if all(r.matched for r in reports) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# eval

def cmd_eval(args):
    bindings = {}
    for item in args.bind or ():
        name, sep, value = item.partition("=")
        if not sep or name not in dsl.VAR_NAMES:
            raise UsageError(f"bad binding {item!r} (want var=halfint)")
        bindings[name] = corpus.parse_half(value)
    expr = dsl.parse(args.expr)
    value = dsl.eval_scalar(expr, bindings)
    print(value.render())
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="finsum",
                                     description="Exact verification of binomial-harmonic sum identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid_flags(p):
        p.add_argument("--n", help="n grid, e.g. 0..24 or 1,2,5")
        for name in ("r", "s", "u", "v"):
            p.add_argument(f"--{name}", help=f"{name} grid (half-integers)")

    p = sub.add_parser("verify", help="verify identity documents")
    p.add_argument("paths", nargs="+")
    add_grid_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="apply Beta/derivative/central transforms")
    p.add_argument("path")
    p.add_argument("--op", required=True,
                   help="comma chain of beta, dds, ddr, central_v, central_uv")
    add_grid_flags(p)
    p.add_argument("--negate-t", action="store_true", help="apply t -> -t first")
    p.add_argument("--check", action="store_true", help="verify the output on a default grid")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("corpus", help="operate on the shipped corpus")
    p.add_argument("action", choices=("run",))
    p.add_argument("--name", action="append", help="restrict to entry name (repeatable)")
    p.add_argument("--status", choices=("verified", "check", "disputed", "erratum_claimed"))
    p.add_argument("--corpus-dir", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("eval", help="evaluate a scalar expression exactly")
    p.add_argument("expr")
    p.add_argument("--bind", action="append", help="variable binding var=halfint (repeatable)")
    p.add_argument("--precision", type=int, default=30,
                   help="digits for --float output")
    p.add_argument("--float", action="store_true", dest="as_float",
                   help="also print a numeric value")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "eval" and args.as_float:
            return _eval_with_float(args)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DslSyntaxError, EvalTypeError, PoleError, DivisionByZero,
            UnboundVariable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD
    except ShapeError as exc:
        hint = "" if "1+t" not in str(exc) else "  (hint: try --negate-t)"
        print(f"error: {exc}{hint}", file=sys.stderr)
        return EXIT_SHAPE
    except FinsumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def _eval_with_float(args):
    bindings = {}
    for item in args.bind or ():
        name, sep, value = item.partition("=")
        if not sep or name not in dsl.VAR_NAMES:
            raise UsageError(f"bad binding {item!r} (want var=halfint)")
        bindings[name] = corpus.parse_half(value)
    value = dsl.eval_scalar(dsl.parse(args.expr), bindings)
    print(value.render())
    print(value.to_float(args.precision))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
