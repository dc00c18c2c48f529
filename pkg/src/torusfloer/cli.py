"""Command line interface.

Exit codes: 0 success, 1 validity or precondition failure, 2 parse failure,
3 internal consistency failure.

All curve and type D inputs must be framed so that the rational longitude
is the horizontal slope 0 (letter l) and mu is vertical (letter m).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .curves import UnsupportedCurveError
from .formats import ParseError, format_complex, parse_document
from .hfst import ConsistencyError, filling_dims, is_hfst
from .pairing import BoundednessError, ComplexError, box_tensor, homology_dim, mor_pairing
from .seifert import classify
from .structures import (AInftyMod, BUILTINS, StructureError, TypeD, builtin,
                         check_ainfty, check_typeD)


class UsageError(Exception):
    pass


def load(source: str, kind: str | None = None):
    """A file path, or ``builtin:NAME``."""
    if source.startswith("builtin:"):
        obj = builtin(source.split(":", 1)[1])
        return ("ainfty" if isinstance(obj, AInftyMod) else "typed"), obj
    return parse_document(Path(source).read_text(), kind)


def cmd_validate(args, out) -> int:
    kind, obj = load(args.file, args.kind)
    if kind == "typed":
        problems = check_typeD(obj)
    elif kind == "ainfty":
        problems = check_ainfty(obj)
    else:
        problems = []
    if problems:
        for p in problems:
            out.write(f"invalid: {p}\n")
        return 1
    out.write(f"ok: {kind}\n")
    return 0


def cmd_pair(args, out) -> int:
    kind_a, A = load(args.first)
    kind_d, D = load(args.second)
    if kind_d != "typed":
        raise UsageError("the second input must be a type D structure")
    if args.mor:
        if kind_a != "typed":
            raise UsageError("--mor pairs two type D structures")
        C = mor_pairing(A, D)
    else:
        if kind_a != "ainfty":
            raise UsageError("the first input must be an A-infinity module (or use --mor)")
        if not args.twisted:
            A = A.specialize()
        C = box_tensor(A, D)
    out.write(f"field: {C.field}\n")
    out.write(f"generators: {len(C)}\n")
    out.write(f"homology_dim: {homology_dim(C)}\n")
    if args.dump:
        out.write(format_complex(C))
    return 0


def _hfst_input(source):
    kind, obj = load(source)
    if kind not in ("curve", "typed"):
        raise UsageError("expected a curve file or a type D structure")
    return obj


def cmd_is_hfst(args, out) -> int:
    out.write(is_hfst(_hfst_input(args.file), args.window).as_text())
    return 0


def cmd_fillings(args, out) -> int:
    for k, d in filling_dims(_hfst_input(args.file), args.window):
        out.write(f"filling[{k}]: {d}\n")
    return 0


def cmd_seifert(args, out) -> int:
    kind, d = load(args.file, "seifert")
    out.write(classify(d).as_text(d))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="torusfloer",
        description="Bordered Floer computations over the torus algebra. "
                    "Inputs must be lambda-framed: rational longitude horizontal.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and check a document")
    p.add_argument("file")
    p.add_argument("--kind", choices=["typed", "ainfty", "curve", "seifert"])
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("pair", help="box tensor (or morphism) pairing and its homology")
    p.add_argument("first", help="A-infinity module file (type D with --mor), or builtin:NAME")
    p.add_argument("second", help="type D structure file, or builtin:NAME")
    p.add_argument("--twisted", action="store_true",
                   help="keep Laurent coefficients and compute over F2(t)")
    p.add_argument("--mor", action="store_true", help="morphism complex of two type D structures")
    p.add_argument("--dump", action="store_true", help="print the complex")
    p.set_defaults(func=cmd_pair)

    for name, func, helptext in (("is-hfst", cmd_is_hfst, "HFST verdict with evidence"),
                                 ("fillings", cmd_fillings, "dims along mu + k lambda")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--window", type=int, default=None,
                       help="K, so k ranges over [-K, K] (default: generators + 2)")
        p.set_defaults(func=func)

    p = sub.add_parser("seifert", help="classify a Seifert fibered solid torus")
    p.add_argument("file")
    p.set_defaults(func=cmd_seifert)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return 3
    except (StructureError, BoundednessError, ComplexError, UnsupportedCurveError,
            UsageError, KeyError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
