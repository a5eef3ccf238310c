"""Command line driver.

Exit codes: 0 success, 1 validation or precondition failure, 2 parse error
(or unknown algebra), 3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import report
from .cdga import ValidationError, catalog
from .cohomology import NotClosedError, betti_numbers, class_of, resolve_cap
from .constructions import convolve, gysin_report, tensor
from .dsl import DslError, load_algebra, parse_element, to_source
from .exterior import AlgebraError
from .massey import MasseyPreconditionError, a_massey, massey_scan, triple_massey

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load(spec: str):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return load_algebra(fh.read())
    try:
        return catalog(spec)
    except KeyError:
        raise UsageError(f"{spec!r} is neither a file nor a catalog algebra") from None


def _cocycle(cdga, text: str):
    el = parse_element(text, cdga)
    if not el:
        raise ValueError(f"argument {text!r} is zero; give a nonzero cocycle")
    if not el.is_homogeneous():
        raise ValueError(f"argument {text!r} is not homogeneous")
    return class_of(cdga, el)


def cmd_cohomology(args):
    cdga = load(args.algebra)
    cap = resolve_cap(cdga, args.max_degree)
    out = report.header(cdga, "cohomology")
    out["betti"] = betti_numbers(cdga, cap)
    out["representatives"] = report.representatives(cdga, cap)
    return out, EXIT_OK


def cmd_massey(args):
    cdga = load(args.algebra)
    classes = [_cocycle(cdga, t) for t in (args.a1, args.a2, args.a3)]
    res = triple_massey(cdga, *classes)
    out = report.header(cdga, "massey")
    out["massey"] = report.massey_payload(res)
    return out, EXIT_OK


def cmd_amassey(args):
    cdga = load(args.algebra)
    classes = [_cocycle(cdga, t) for t in (args.a, args.b1, args.b2, args.b3)]
    res = a_massey(cdga, *classes)
    out = report.header(cdga, "amassey")
    out["massey"] = report.amassey_payload(res)
    return out, EXIT_OK


def _degrees(text: str):
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree triple {text!r}") from None
    if len(parts) != 3 or min(parts) < 0:
        raise argparse.ArgumentTypeError("expected three non-negative degrees p,q,r")
    return parts


def cmd_scan(args):
    cdga = load(args.algebra)
    found = massey_scan(cdga, args.degrees, args.max_degree, full=args.full)
    out = report.header(cdga, "scan")
    out["degrees"] = list(args.degrees)
    out["findings"] = [report.massey_payload(r) for r in found]
    return out, EXIT_OK


def cmd_gysin(args):
    cdga = load(args.algebra)
    omega = parse_element(args.omega, cdga)
    rep = gysin_report(cdga, omega, args.max_degree)
    out = report.header(cdga, "gysin")
    out["gysin"] = report.gysin_payload(rep, omega)
    return out, EXIT_OK if rep.consistent else EXIT_INTERNAL


def cmd_tensor(args):
    A, B = load(args.first), load(args.second)
    cap = args.max_degree
    C = tensor(A, B)
    out = report.header(C, "tensor")
    bc = betti_numbers(C, cap)
    conv = convolve(betti_numbers(A, cap), betti_numbers(B, cap), cap)
    out["betti"] = bc
    out["factor_betti"] = [betti_numbers(A, cap), betti_numbers(B, cap)]
    out["kunneth_prediction"] = conv
    out["kunneth_agrees"] = bc == conv
    out["representatives"] = report.representatives(C, cap)
    return out, EXIT_OK if bc == conv else EXIT_INTERNAL


def cmd_catalog(args):
    return to_source(catalog(args.name)), EXIT_OK


def _global_flags(parser, prefix=""):
    # the same flags are accepted before and after the subcommand; argparse
    # lets a subparser clobber the parent's dests, so each level keeps its own
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest=prefix + "format", action="store_const", const="json")
    fmt.add_argument("--text", dest=prefix + "format", action="store_const", const="text")
    parser.add_argument("--validate-only", dest=prefix + "validate_only", action="store_true",
                        help="parse and validate the algebra, then stop")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common)
    parser = argparse.ArgumentParser(prog="dgakit", description="Cohomology and Massey products of CDGAs.")
    _global_flags(parser, "top_")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="Betti numbers and representatives")
    p.add_argument("algebra")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("massey", parents=[common], help="triple Massey product <a1,a2,a3>")
    p.add_argument("algebra")
    p.add_argument("a1")
    p.add_argument("a2")
    p.add_argument("a3")
    p.set_defaults(func=cmd_massey)

    p = sub.add_parser("amassey", parents=[common], help="a-Massey product <a; b1,b2,b3>")
    p.add_argument("algebra")
    for name in ("a", "b1", "b2", "b3"):
        p.add_argument(name)
    p.set_defaults(func=cmd_amassey)

    p = sub.add_parser("scan", parents=[common], help="search for non-vanishing triple products")
    p.add_argument("algebra")
    p.add_argument("--degrees", type=_degrees, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--full", action="store_true", help="do not skip mirrored triples")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("gysin", parents=[common], help="circle extension by omega and Gysin check")
    p.add_argument("algebra")
    p.add_argument("--omega", required=True)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_gysin)

    p = sub.add_parser("tensor", parents=[common], help="tensor product and Kunneth check")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("catalog", parents=[common], help="print a built-in algebra as source")
    p.add_argument("name")
    p.set_defaults(func=cmd_catalog)
    return parser


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = args.format or args.top_format or "json"
    args.validate_only = args.validate_only or args.top_validate_only
    try:
        if args.validate_only and args.command != "catalog":
            name = getattr(args, "algebra", None) or args.first
            cdga = load(name)
            if args.command == "tensor":
                load(args.second)
            payload, code = report.header(cdga, "validate"), EXIT_OK
            payload["valid"] = True
        else:
            payload, code = args.func(args)
    except DslError as exc:
        print(exc, file=stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        for d in exc.diagnostics:
            print(f"invalid: {d}", file=stderr)
        return EXIT_INVALID
    except (MasseyPreconditionError, NotClosedError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if isinstance(payload, str):
        stdout.write(payload)
    elif args.format == "text":
        stdout.write(report.to_text(payload) + "\n")
    else:
        stdout.write(report.dumps(payload))
    return code


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
