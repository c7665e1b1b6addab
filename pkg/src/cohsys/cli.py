"""Command-line front end.

Exit codes: 0 success, 3 when any verdict is Undetermined, 2 on bad input
or any package error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import curve as oracle
from .butler import butler_sweep, maind_conditions
from .constructions import EXAMPLES, example_profile, overview_table
from .errors import CohsysError, ParseError, SchemaError
from .profile import (
    SystemProfile,
    profile_from_dict,
    triple_verdict,
    verdict_alpha_large,
    verdict_alpha_small,
    verdict_at_alpha,
)
from .render import FORMATS, has_undetermined, render
from .slopes import SystemType, critical_alphas, parse_rat

EXIT_OK, EXIT_INPUT, EXIT_UNDETERMINED = 0, 2, 3


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_profile(path) -> SystemProfile:
    return profile_from_dict(load_json(path))


def _triple(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,D,N integers, got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected R,D,N, got {text!r}")
    return parts


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _genus_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _genus_map(text: str) -> dict:
    out = {}
    for item in filter(None, text.split(",")):
        try:
            name, g = item.split("=")
            out[name.strip().upper()] = int(g)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected NAME=G pairs, got {item!r}") from None
    return out


# -- verbs ------------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise CohsysError(f"oracle {args.quantity} needs --{' --'.join(missing)}")


def cmd_oracle(args):
    q = args.quantity
    if q == "secant":
        _need(args, "e", "f", "rank", "sections")
        return oracle.secant_expected_dim(args.e, args.f, args.rank, args.sections)
    _need(args, "genus")
    g = args.genus
    if q == "dk":
        _need(args, "k")
        return {"genus": g, "k": args.k, "d_k": oracle.gonality(g, args.k)}
    if q == "beta":
        _need(args, "k", "d")
        return {"genus": g, "k": args.k, "d": args.d, "beta": oracle.bn_number(g, args.k, args.d),
                "nonempty": oracle.bn_nonempty(g, args.k, args.d)}
    if q == "clifford":
        _need(args, "rank")
        return {"genus": g, "rank": args.rank, "clifford_index": oracle.clifford_index(g, args.rank)}
    if q == "sections":
        _need(args, "d")
        return {"genus": g, "d": args.d, "max_sections": oracle.max_line_sections(g, args.d)}
    _need(args, "k", "d")
    return {"genus": g, "k": args.k, "d": args.d, "bpf_general": oracle.bpf_general_ok(g, args.k, args.d)}


def cmd_walls(args):
    r, d, n = args.system
    if args.caps:
        obj = load_json(args.caps)
        if not isinstance(obj, dict):
            raise SchemaError("caps file must hold a JSON object")
        obj = dict(obj)
        obj["system"] = {"r": r, "d": d, "n": n, "generated": bool(args.generated)}
        prof = profile_from_dict(obj)
    else:
        if args.genus is None:
            raise CohsysError("--default-caps needs --genus")
        # curve caps only; degree bounds come from the system being generated
        prof = SystemProfile(oracle.CurveModel(args.genus), SystemType(r, d, n, generated=True))
    return critical_alphas(prof.sys, prof.caps())


def cmd_verdict(args):
    prof = parse_profile(args.profile)
    if args.alpha is not None:
        return verdict_at_alpha(prof, args.alpha)
    if prof.sys.generated and prof.sys.d > 0:
        return triple_verdict(prof)
    return [verdict_alpha_small(prof), verdict_alpha_large(prof)]


def cmd_example(args):
    return example_profile(args.name, args.genus)


def cmd_overview(args):
    return overview_table(args.genus_map)


def cmd_butler(args):
    return maind_conditions(args.genus, args.case, strict=not args.proof_mode)


def cmd_atlas(args):
    rows = butler_sweep(args.genus_range)
    Path(args.out).write_text(render(rows, args.format) + "\n")
    return {"rows": len(rows), "out": str(args.out)}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                     help="output format (default: table)")
    p = argparse.ArgumentParser(prog="cohsys", parents=[fmt],
                                description="Exact stability checks for coherent systems on general curves.")
    sub = p.add_subparsers(dest="verb", required=True)

    o = sub.add_parser("oracle", parents=[fmt], help="curve invariants")
    o.add_argument("quantity", choices=("dk", "beta", "clifford", "secant", "sections", "bpf"))
    o.add_argument("--genus", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--d", type=int)
    o.add_argument("--rank", type=int)
    o.add_argument("--e", type=int)
    o.add_argument("--f", type=int)
    o.add_argument("--sections", type=int)
    o.set_defaults(func=cmd_oracle)

    w = sub.add_parser("walls", parents=[fmt], help="critical values of alpha")
    w.add_argument("--system", type=_triple, required=True, metavar="R,D,N")
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--caps", metavar="FILE", help="profile-style JSON without the system key")
    src.add_argument("--default-caps", action="store_true")
    w.add_argument("--genus", type=int)
    w.add_argument("--generated", action="store_true", help="with --caps: mark the system generated")
    w.set_defaults(func=cmd_walls)

    v = sub.add_parser("verdict", parents=[fmt], help="stability verdicts for a profile")
    v.add_argument("--profile", required=True, metavar="FILE")
    v.add_argument("--alpha", type=_rational, metavar="P/Q")
    v.set_defaults(func=cmd_verdict)

    e = sub.add_parser("example", parents=[fmt], help="build one of the seven examples")
    e.add_argument("name", type=str.upper, choices=EXAMPLES)
    e.add_argument("--genus", type=int)
    e.set_defaults(func=cmd_example)

    ov = sub.add_parser("overview", parents=[fmt], help="the eight-row overview grid")
    ov.add_argument("--genus-map", type=_genus_map, default=None, metavar="NAME=G,...")
    ov.set_defaults(func=cmd_overview)

    b = sub.add_parser("butler", parents=[fmt], help="feasibility of the Butler cases")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--case", choices=("a", "b", "A", "B"), required=True)
    b.add_argument("--proof-mode", action="store_true",
                   help="case A needs only g != 0 mod 3")
    b.set_defaults(func=cmd_butler)

    a = sub.add_parser("atlas", parents=[fmt], help="Butler feasibility sweep written to a file")
    a.add_argument("--genus-range", type=_genus_range, required=True, metavar="A..B")
    a.add_argument("--out", required=True, metavar="FILE")
    a.set_defaults(func=cmd_atlas)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "table"
    try:
        report = args.func(args)
    except (CohsysError, ValueError) as exc:
        print(f"cohsys: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(report, args.format))
    return EXIT_UNDETERMINED if has_undetermined(report) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
