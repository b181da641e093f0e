"""Command line front end.

Exit status: 0 on success, 1 on input errors, 2 when a gate is inconclusive.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import files
from .bundle_rr import BundleInvariants, HypersurfaceContext, chi_rank2
from .exact import (
    ExpressionSyntaxError,
    InconsistentSystemError,
    MissingUnknownError,
    Poly,
    format_value,
    hdim,
    parse_poly,
    read_assignment,
)
from .gorenstein import (
    DOMINANT_IMPOSSIBLE,
    IncompatibleShapeError,
    flag_gate,
    km_h0_normal,
    solve_hilbert,
)
from .liaison import CIType, NotACurveComplexError, cancel_pair, degree_genus, link
from .report import classification_table, render, section_tables

AMBIENT_ENV = "ACMGATE_AMBIENT_DIM"


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, assign: Optional[str]):
    """Parsed file plus the unknown assignment already applied to it."""
    obj = files.loads(_read_text(path))
    values = read_assignment(_read_text(assign)) if assign else {}
    if values:
        if isinstance(obj, files.ResolutionFile):
            inv = obj.inv
            if inv is not None:
                inv = type(inv)(inv.d.subs(values), inv.g.subs(values), inv.e)
            obj = files.ResolutionFile(obj.res.subs(values), inv, obj.constraints)
        else:
            obj = obj.subs(values)
    return obj, values


def _constraints(rf: files.ResolutionFile, values) -> List[Poly]:
    return [p.subs(values) for p in rf.constraint_polys()]


def _require_resolution(obj) -> files.ResolutionFile:
    if not isinstance(obj, files.ResolutionFile):
        raise InputError("expected a resolution file (with 'e' and 'pairs')")
    return obj


def _ambient(args) -> int:
    if args.ambient_dim is not None:
        return args.ambient_dim
    env = os.environ.get(AMBIENT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{AMBIENT_ENV} must be an integer, got {env!r}") from None
    return hdim(args.degree) - 1


def cmd_classify(args) -> int:
    table = classification_table(HypersurfaceContext(args.degree))
    sys.stdout.write(render([table], args.format))
    return 0


def cmd_chi(args) -> int:
    inv = BundleInvariants(args.c1, parse_poly(args.c2), HypersurfaceContext(args.r))
    print(format_value(chi_rank2(inv)))
    return 0


def _solution(rf: files.ResolutionFile, values):
    if rf.inv is None:
        return {}
    return solve_hilbert(rf.res, rf.inv, _constraints(rf, values))


def cmd_km(args) -> int:
    obj, values = _load(args.file, args.assign)
    rf = _require_resolution(obj)
    sol = _solution(rf, values)
    value = km_h0_normal(rf.res, rf.inv).subs(sol)
    print(f"h0(N_C) = {value}")
    for k, v in sol.items():
        print(f"  {k} = {v}")
    return 0


def cmd_gate(args) -> int:
    obj, values = _load(args.file, args.assign)
    rf = _require_resolution(obj)
    if not rf.res.pairs:
        raise InputError("no generators")
    if rf.inv is None:
        raise InputError("gate needs 'invariants' (d and g)")
    ambient = _ambient(args)
    rep = flag_gate(rf.res, rf.inv, ambient_dim=ambient, degree=args.degree, extra=_constraints(rf, values))
    print(f"h0(N_C) = {rep.h0N}")
    print(f"h0(I_C({args.degree})) = {rep.h0I6}")
    print(f"bound = {rep.bound}")
    print(f"ambient_dim = {ambient}")
    print(f"verdict = {rep.verdict}")
    return 0 if rep.verdict == DOMINANT_IMPOSSIBLE else 2


class _Ordered(argparse.Action):
    """Collect ``--ci`` and ``--cancel`` into one ordered list of steps."""

    def __call__(self, parser, namespace, values, option_string=None):
        steps = getattr(namespace, "steps", None) or []
        steps.append((self.dest, values))
        namespace.steps = steps


def _parse_ci(text: str) -> CIType:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad complete intersection type {text!r}") from None
    if len(parts) != 3:
        raise InputError(f"complete intersection needs three degrees, got {text!r}")
    return CIType(*parts)


def _parse_cancel(text: str):
    # POS:TWIST:COUNT with POS in {1-2, 2-3}
    try:
        pos, twist, count = text.split(":")
        p = tuple(int(v) for v in pos.split("-"))
        return p, int(twist), parse_poly(count)
    except (ValueError, ExpressionSyntaxError):
        raise InputError(f"bad cancellation {text!r}; expected POS:TWIST:COUNT, e.g. 2-3:8:2") from None


def cmd_link(args) -> int:
    obj, _ = _load(args.file, args.assign)
    cx = obj.res.to_complex() if isinstance(obj, files.ResolutionFile) else obj
    steps = getattr(args, "steps", None) or []
    if not any(kind == "ci" for kind, _ in steps):
        raise InputError("link needs at least one --ci")
    for kind, value in steps:
        if kind == "ci":
            cx = link(cx, _parse_ci(value))
        else:
            pos, twist, count = _parse_cancel(value)
            cx = cancel_pair(cx, pos, twist, count)
    if args.format == "json":
        sys.stdout.write(files.dumps(cx))
    else:
        print(cx)
        try:
            deg, genus = degree_genus(cx)
            print(f"degree = {deg}")
            print(f"genus = {genus}")
        except NotACurveComplexError:
            if cx.variables():
                print("degree/genus: not determined (symbolic multiplicities unconstrained)")
            else:
                print("degree/genus: not a curve complex")
    return 0


def cmd_reproduce(args) -> int:
    sys.stdout.write(render(section_tables(args.section), args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acmgate", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="c2 relations for each admissible c1")
    s.add_argument("--degree", type=int, default=6)
    s.add_argument("--format", choices=("md", "csv"), default="md")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("chi", help="Euler characteristic of a rank-2 bundle")
    s.add_argument("--r", type=int, default=6)
    s.add_argument("--c1", type=int, required=True)
    s.add_argument("--c2", default="c2", help="integer or expression")
    s.set_defaults(func=cmd_chi)

    for name, func, helptext in (
        ("km", cmd_km, "h0 of the normal bundle from a resolution file"),
        ("gate", cmd_gate, "flag-scheme dimension gate"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file")
        s.add_argument("--assign", help="key=integer file of unknown values")
        if name == "gate":
            s.add_argument("--ambient-dim", type=int, default=None)
            s.add_argument("--degree", type=int, default=6, help="hypersurface degree")
        s.set_defaults(func=func)

    s = sub.add_parser("link", help="link a curve through complete intersections")
    s.add_argument("file")
    s.add_argument("--ci", action=_Ordered, dest="ci", metavar="D1,D2,D3")
    s.add_argument("--cancel", action=_Ordered, dest="cancel", metavar="POS:TWIST:COUNT")
    s.add_argument("--assign")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_link)

    s = sub.add_parser("reproduce", help="regenerate the reference tables")
    s.add_argument("--section", choices=("3", "5", "cases", "gates"), required=True)
    s.add_argument("--format", choices=("md", "csv"), default="md")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except files.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except MissingUnknownError as exc:
        print(f"error: unknown symbol: {exc}", file=sys.stderr)
    except (IncompatibleShapeError, InconsistentSystemError) as exc:
        print(f"error: inconsistent constraints: {exc}", file=sys.stderr)
    except ExpressionSyntaxError as exc:
        print(f"error: bad expression: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
