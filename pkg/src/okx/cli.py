"""``okx`` command line: zariski | body | loci | seshadri | verify.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 not pseudoeffective where pseudoeffectivity is required.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .convex import max_subsimplex
from .errors import (
    DimensionError,
    GeometryError,
    InadmissibleFlag,
    IsolatedPoint,
    NotPseudoeffective,
    OkxError,
    ParameterError,
    StabilizationError,
    UnknownCurve,
)
from .fixtures import FixtureSpec, build_fixture
from .loci import augmented_base_locus, flag_criteria, restricted_base_locus
from .nslattice import SurfaceGeometry, _coerce
from .numbers import format_rational, parse_rational_list
from .okounkov import Flag2D, check_flag, general_point, limiting_body
from .serialize import body_csv, body_svg, load_geometry, vertices_json
from .seshadri import moving_seshadri_bounds
from .verify import run_verification
from .zariski import zariski_decompose

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_PSEFF = 0, 1, 2, 3


class InputError(OkxError):
    pass


def _geometry(args) -> SurfaceGeometry:
    if args.geometry and args.fixture:
        raise InputError("use either --fixture or -g, not both")
    if args.geometry:
        return load_geometry(args.geometry)
    if not args.fixture:
        raise InputError("a geometry is required: --fixture NAME or -g FILE")
    params = []
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"--param expects k=v, got {item!r}")
        try:
            params.append((key.strip(), int(value)))
        except ValueError:
            raise InputError(f"--param {key} must be an integer") from None
    return build_fixture(FixtureSpec(args.fixture, tuple(params))).geometry


def _divisor(args, geom) -> tuple:
    if args.D is None:
        raise InputError("-D c1,c2,... is required")
    try:
        return _coerce(geom, parse_rational_list(args.D))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad divisor {args.D!r}: {exc}") from None


def _point(geom, label: str):
    try:
        return geom.point(label)
    except KeyError:
        raise InputError(f"unknown point {label!r}; known: {[p.label for p in geom.points]}") from None


def _flag(geom, text: str) -> Flag2D:
    curve, sep, point = text.partition(":")
    if not sep:
        raise InputError(f"--flag expects CURVE:POINT, got {text!r}")
    geom.curve(curve)
    if point in ("gen", "general"):
        flag = Flag2D(curve, general_point(curve))
    else:
        flag = Flag2D(curve, _point(geom, point))
    check_flag(geom, flag)
    return flag


def _q(v) -> str:
    return format_rational(v)


def _vec(v) -> str:
    return "(" + ",".join(_q(x) for x in v) + ")"


def cmd_zariski(args) -> int:
    geom = _geometry(args)
    D = _divisor(args, geom)
    zd = zariski_decompose(geom, D)
    if args.format == "json":
        print(json.dumps({"positive": [_q(x) for x in zd.positive],
                          "negative": [{"curve": l, "coefficient": _q(a)} for l, a in zd.negative]},
                         indent=2))
    else:
        print(f"P = {_vec(zd.positive)}")
        print("N = [" + ", ".join(f"{l}:{_q(a)}" for l, a in zd.negative) + "]")
    return EXIT_OK


def cmd_body(args) -> int:
    geom = _geometry(args)
    D = _divisor(args, geom)
    if not args.flag:
        raise InputError("--flag CURVE:POINT is required")
    flag = _flag(geom, args.flag)
    body = limiting_body(geom, D, flag)
    if args.format == "json":
        print(json.dumps({"flag": flag.label, "empty": body.is_empty,
                          "vertices": vertices_json(body)}, indent=2))
    elif args.format == "csv":
        sys.stdout.write(body_csv(body))
    else:
        if body.is_empty:
            print("empty body")
        else:
            print("vertices: " + " ".join(_vec(v) for v in body.vertices))
    if args.svg:
        simplex = max_subsimplex(body) if not body.is_empty else None
        Path(args.svg).write_text(body_svg(body, simplex, title=f"{geom.name} D={_vec(D)} flag {flag.label}"),
                                  encoding="utf-8")
    return EXIT_OK


def cmd_loci(args) -> int:
    geom = _geometry(args)
    D = _divisor(args, geom)
    bm, bp = restricted_base_locus(geom, D), augmented_base_locus(geom, D)
    rows = flag_criteria(geom, D)
    failed = False
    table = []
    for flag, cm, cp, om, op in rows:
        ok = cm == om and cp == op
        failed |= not ok
        table.append({"flag": flag.label, "bminus_criterion": cm, "bplus_criterion": cp,
                      "x_in_bminus": om, "x_in_bplus": op, "verdict": "PASS" if ok else "FAIL"})
    if args.format == "json":
        print(json.dumps({"B_minus": str(bm), "B_plus": str(bp), "flags": table}, indent=2))
    else:
        print(f"B- = {bm}")
        print(f"B+ = {bp}")
        print(f"{'flag':<18}{'B- body':>9}{'B- oracle':>11}{'B+ body':>9}{'B+ oracle':>11}  verdict")
        for r in table:
            print(f"{r['flag']:<18}{str(r['bminus_criterion']):>9}{str(r['x_in_bminus']):>11}"
                  f"{str(r['bplus_criterion']):>9}{str(r['x_in_bplus']):>11}  {r['verdict']}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_seshadri(args) -> int:
    geom = _geometry(args)
    D = _divisor(args, geom)
    if not args.x:
        raise InputError("-x POINT is required")
    x = _point(geom, args.x)
    b = moving_seshadri_bounds(geom, D, x)
    if args.format == "json":
        print(json.dumps({"point": x.label, "lower": _q(b.lower), "upper": _q(b.upper),
                          "oracle": None if b.oracle is None else _q(b.oracle),
                          "flags": [{"flag": f, "lambda": [_q(l) for l in lam]} for f, lam in b.flags]},
                         indent=2))
    else:
        for f, lam in b.flags:
            print(f"flag {f:<16} lambda = {_vec(lam)}")
        print(f"lower={_q(b.lower)}")
        print(f"upper={_q(b.upper)}")
        print(f"oracle={'n/a (not nef)' if b.oracle is None else _q(b.oracle)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    geom = _geometry(args)
    report = run_verification(geom, samples=args.n, seed=args.seed)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        s = report["summary"]
        print(f"{geom.name}: {s['pass']} PASS, {s['fail']} FAIL -> {s['verdict']}")
    else:
        print(text)
    return EXIT_OK if report["summary"]["fail"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="okx", description="Exact Okounkov bodies and base loci on surfaces")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixture", help="built-in geometry: p2, blp2, f_e, fpp")
    common.add_argument("--param", action="append", metavar="K=V", help="fixture parameter (repeatable)")
    common.add_argument("-g", "--geometry", metavar="FILE", help="geometry JSON file")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zariski", parents=[common], help="Zariski decomposition of a class")
    p.add_argument("-D", help="divisor class c1,c2,... in the lattice basis")
    p.set_defaults(func=cmd_zariski)

    p = sub.add_parser("body", parents=[common], help="limiting Okounkov body for a flag")
    p.add_argument("-D")
    p.add_argument("--flag", metavar="CURVE:POINT")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_body)

    p = sub.add_parser("loci", parents=[common], help="base loci and per-flag body criteria")
    p.add_argument("-D")
    p.set_defaults(func=cmd_loci)

    p = sub.add_parser("seshadri", parents=[common], help="moving Seshadri bounds at a point")
    p.add_argument("-D")
    p.add_argument("-x", metavar="POINT")
    p.set_defaults(func=cmd_seshadri)

    p = sub.add_parser("verify", parents=[common], help="seeded cross-check report")
    p.add_argument("-n", type=int, default=200, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_divisor(argv: Sequence[str]) -> list[str]:
    # "-D -1,0" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "-D":
            nxt = next(it, None)
            out.append(a if nxt is None else f"-D={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_divisor(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except NotPseudoeffective as exc:
        print(f"error: not pseudoeffective: {exc}", file=sys.stderr)
        return EXIT_NOT_PSEFF
    except (InputError, GeometryError, DimensionError, UnknownCurve, InadmissibleFlag,
            IsolatedPoint, ParameterError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StabilizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
