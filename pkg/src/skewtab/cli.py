"""Command-line surface.

Exit codes: 0 success, 1 verdict/numeric failure, 2 usage error, 3 resource
cap exceeded.  Big integers are emitted as decimal strings, rationals as
"p/q", and output is deterministic byte-for-byte for identical commands.
Caps can also be set through the SKEWTAB_MAX_EXCITED, SKEWTAB_MAX_INNER,
SKEWTAB_MAX_BRUTE and SKEWTAB_GRID environment variables; flags win over
the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import asymptotics, bounds, exact, excited, shapes, verify
from .errors import CapExceeded
from .shapes import ShapeFamily, ShapeParseError, SkewShape, parse_shape, shape_text

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ShapeParseError(f"environment variable {name} must be an integer")


def _num(value) -> str:
    """Decimal-string serialization for ints and fractions."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def _flt(value: float) -> str:
    return f"{value:.12g}"


def _resolve_shape(text: str) -> SkewShape:
    parsed = parse_shape(text)
    if isinstance(parsed, ShapeFamily):
        return parsed.build()
    return parsed


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


# -- subcommands -----------------------------------------------------------------


def cmd_count(args) -> int:
    shape = _resolve_shape(args.shape)
    e = exact.jacobi_trudi_count(shape)
    F = exact.naive_hlf(shape)
    xi = excited.xi_determinant(shape)
    doc = {
        "shape": shape_text(shape),
        "n": shape.size,
        "e": _num(e),
        "F": _num(F),
        "xi": _num(xi),
    }
    if args.format == "text":
        for key, val in doc.items():
            print(f"{key}: {val}")
    else:
        _emit_json(doc)
    return EXIT_OK


def cmd_bounds(args) -> int:
    shape = _resolve_shape(args.shape)
    report = bounds.bounds_report(shape)
    doc = {
        "shape": shape_text(shape),
        "n": shape.size,
        "exact": _num(report.exact),
        "xi": _num(report.xi),
        "lower": {k: _num(v) for k, v in report.lower.items()},
        "upper": {k: _num(v) for k, v in report.upper.items()},
        "chain-sizes": list(report.chains.sizes),
        "verdicts": report.verdicts,
        "log-gaps": {k: _flt(v) for k, v in report.log_gaps.items()},
    }
    if args.format == "text":
        print(f"shape {doc['shape']}  n={doc['n']}  exact={doc['exact']}  xi={doc['xi']}")
        width = max(len(k) for k in list(report.lower) + list(report.upper))
        for k, v in report.lower.items():
            mark = "ok" if report.verdicts[k] else "FAIL"
            print(f"  lower {k:<{width}} {_num(v):>24}  {mark}")
        for k, v in report.upper.items():
            mark = "ok" if report.verdicts[k] else "FAIL"
            print(f"  upper {k:<{width}} {_num(v):>24}  {mark}")
    else:
        _emit_json(doc)
    return EXIT_OK if report.all_verdicts_hold else EXIT_VERDICT


def _render_grid(shape: SkewShape, diagram) -> str:
    lam = shape.outer
    occupied = set(map(tuple, diagram))
    lines = []
    for i in range(1, len(lam) + 1):
        row = "".join(
            "#" if (i, j) in occupied else "." for j in range(1, lam.part(i) + 1)
        )
        lines.append(row)
    return "\n".join(lines)


def cmd_excited(args) -> int:
    shape = _resolve_shape(args.shape)
    diagrams = excited.enumerate_excited(
        shape, mu_cap=args.max_inner, xi_cap=args.max_excited
    )
    doc = {
        "shape": shape_text(shape),
        "xi": _num(len(diagrams)),
        "diagrams": [[[i, j] for i, j in d] for d in diagrams],
    }
    if args.paths:
        doc["paths"] = [
            [[[i, j] for i, j in path] for path in excited.paths_from_diagram(shape, d).paths]
            for d in diagrams
        ]
    if args.render:
        blocks = [_render_grid(shape, d) for d in diagrams]
        print("\n\n".join(blocks))
        return EXIT_OK
    _emit_json(doc)
    return EXIT_OK


def cmd_nhlf(args) -> int:
    shape = _resolve_shape(args.shape)
    caps = {"mu_cap": args.max_inner, "xi_cap": args.max_excited}
    e = excited.nhlf_count(shape, **caps)
    lo, hi = excited.min_max_term(shape, **caps)
    doc = {
        "shape": shape_text(shape),
        "e": _num(e),
        "xi": _num(excited.xi_determinant(shape)),
        "min-term": _num(lo),
        "max-term": _num(hi),
    }
    _emit_json(doc)
    return EXIT_OK


def _parse_range(spec: str) -> list[int]:
    pieces = spec.split(":")
    if len(pieces) == 1:
        return [int(pieces[0])]
    if len(pieces) == 2:
        return list(range(int(pieces[0]), int(pieces[1]) + 1))
    if len(pieces) == 3:
        return list(range(int(pieces[0]), int(pieces[1]) + 1, int(pieces[2])))
    raise ShapeParseError("range must be K, LO:HI, or LO:HI:STEP")


def cmd_family(args) -> int:
    ks = _parse_range(args.k)
    extra = {}
    if args.m is not None:
        extra["m"] = args.m
    rows = asymptotics.family_report(args.family, ks, **extra)
    lines = ["family,k,n,log_e_exact,c_k,logF,logXi,verdict"]
    for r in rows:
        lines.append(
            f"{r.family},{r.k},{r.n},{_flt(r.log_e)},{_flt(r.c_k)},"
            f"{_flt(r.log_F)},{_flt(r.log_xi)},{str(r.verdict).lower()}"
        )
    print("\n".join(lines))
    return EXIT_OK if all(r.verdict for r in rows) else EXIT_VERDICT


def cmd_integrate(args) -> int:
    raw = args.spec
    if not raw.lstrip().startswith("{"):
        with open(raw, encoding="utf-8") as fh:
            raw = fh.read()
    try:
        spec = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ShapeParseError(f"bad boundary spec: {exc}")
    if "outer" not in spec:
        raise ShapeParseError("boundary spec needs an 'outer' point list")
    shape = asymptotics.StableShape(spec["outer"], spec.get("inner"))
    grid = args.grid if args.grid is not None else int(spec.get("grid", args.grid_default))
    value = asymptotics.hook_integral(shape, grid=grid)
    _emit_json(
        {"grid": grid, "area": _flt(shape.area()), "integral": _flt(value)}
    )
    return EXIT_OK


def cmd_lr(args) -> int:
    lam = shapes.parse_partition(args.outer)
    mu = shapes.parse_partition(args.mu)
    nu = shapes.parse_partition(args.nu)
    c = exact.lr_coefficient(lam, mu, nu, cap=args.max_brute)
    _emit_json({"lr": _num(c)})
    return EXIT_OK


def cmd_verify(args) -> int:
    groups = tuple(g.strip() for g in args.groups.split(",") if g.strip())
    results = verify.run_suite(max_size=args.max_size, groups=groups)
    failed = False
    for res in results:
        status = "ok" if res.ok else f"{len(res.failures)} failures"
        print(f"{res.name}: checked {res.checked} shapes, {status}")
        for item in res.failures[:20]:
            print(f"  {item}")
        failed = failed or not res.ok
    return EXIT_VERDICT if failed else EXIT_OK


# -- parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewtab",
        description="Exact counts, bounds and asymptotics for skew standard tableaux",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap (results are deterministic regardless)")
        return p

    max_exc = _env_int("SKEWTAB_MAX_EXCITED", excited.DEFAULT_XI_CAP)
    max_inner = _env_int("SKEWTAB_MAX_INNER", excited.DEFAULT_MU_CAP)
    max_brute = _env_int("SKEWTAB_MAX_BRUTE", exact.DEFAULT_BRUTE_CAP)
    grid_default = _env_int("SKEWTAB_GRID", 512)

    p = add("count", cmd_count, "exact count, naive hook value, excited count")
    p.add_argument("shape")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = add("bounds", cmd_bounds, "full bounds report with verdicts")
    p.add_argument("shape")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = add("excited", cmd_excited, "enumerate excited diagrams")
    p.add_argument("shape")
    p.add_argument("--paths", action="store_true", help="include path families")
    p.add_argument("--render", action="store_true", help="plain-text grids")
    p.add_argument("--max-excited", type=int, default=max_exc)
    p.add_argument("--max-inner", type=int, default=max_inner)

    p = add("nhlf", cmd_nhlf, "count through the excited hook sum")
    p.add_argument("shape")
    p.add_argument("--max-excited", type=int, default=max_exc)
    p.add_argument("--max-inner", type=int, default=max_inner)

    p = add("family", cmd_family, "CSV report over a parametric family")
    p.add_argument("family", choices=sorted(shapes.FAMILY_BUILDERS))
    p.add_argument("--k", required=True, help="K, LO:HI or LO:HI:STEP")
    p.add_argument("--m", type=int, default=None, help="extra column-length parameter")

    p = add("integrate", cmd_integrate, "hook integral of a piecewise-linear shape")
    p.add_argument("spec", help="JSON file path or inline JSON")
    p.add_argument("--grid", type=int, default=None)
    p.set_defaults(grid_default=grid_default)

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient")
    p.add_argument("outer")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--max-brute", type=int, default=max_brute)

    p = add("verify", cmd_verify, "run the exhaustive small-shape sweeps")
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--groups", default="oracles,bounds")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ShapeParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
