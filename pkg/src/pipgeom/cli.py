"""Command-line surface: certify, vieta, construct, verify.

All machine-readable output is JSON on stdout and is byte-deterministic
for fixed inputs and flags; wall-clock timing goes to stderr.  The
`certify` exit code distinguishes a pseudointegral polygon (0) from a
rational one that is not (1) and from unusable input (2).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .constructions import ConstructionSpec, NotConstructibleError, build
from .ehrhart import is_pseudointegral
from .polygon import DegenerateHullError, RationalPolygon
from .suites import SUITES
from .svg import render_svg
from .vieta import VietaSolution, enumerate_reduced, family, is_vieta_reduced, jump_forest

USAGE_ERROR = 2


def _emit(payload: dict, started: float) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))
    print(f"elapsed_ms={int((time.time() - started) * 1000)}", file=sys.stderr)


def _cmd_certify(args: argparse.Namespace) -> int:
    started = time.time()
    try:
        with open(args.polygon_file) as fh:
            data = json.load(fh)
        P = RationalPolygon.from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read polygon: {exc}", file=sys.stderr)
        return USAGE_ERROR
    cert = is_pseudointegral(P)
    _emit(
        {
            "command": "certify",
            "inputs": {"polygon": P.to_json_dict()},
            "results": cert.to_json_dict(),
        },
        started,
    )
    return 0 if cert.is_pip else 1


def _solutions_json(solutions) -> list[list[int]]:
    return [[s.x, s.y, s.z, s.b] for s in sorted(solutions)]


def _solutions_table(solutions) -> str:
    rows = [("b", "x", "y", "z")] + [
        (str(s.b), str(s.x), str(s.y), str(s.z))
        for s in sorted(solutions, key=lambda s: (s.b, s.x, s.y, s.z))
    ]
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


def _cmd_vieta(args: argparse.Namespace) -> int:
    started = time.time()
    if not 1 <= args.b <= 9:
        print("error: --b must be in 1..9", file=sys.stderr)
        return USAGE_ERROR
    modes = sum(1 for flag in (args.reduced, args.forest, args.family) if flag)
    if modes != 1:
        print("error: choose exactly one of --reduced, --forest, --family", file=sys.stderr)
        return USAGE_ERROR
    inputs: dict = {"b": args.b}
    if args.reduced:
        sols = enumerate_reduced(args.b)
        if args.format == "table":
            print(_solutions_table(sols))
            return 0
        results = {"reduced": _solutions_json(sols)}
    elif args.forest:
        if args.max_z is None:
            print("error: --forest requires --max-z", file=sys.stderr)
            return USAGE_ERROR
        inputs["max_z"] = args.max_z
        forest = jump_forest(args.b, args.max_z)
        results = {
            "forest": {
                f"{s.x},{s.y},{s.z}": [f"{t.x},{t.y},{t.z}" for t in nbrs]
                for s, nbrs in forest.items()
            }
        }
    else:
        try:
            x, y, z = (int(v) for v in args.family.split(","))
            seed = VietaSolution.from_triple(x, y, z)
        except ValueError as exc:
            print(f"error: bad --family seed: {exc}", file=sys.stderr)
            return USAGE_ERROR
        if seed.b != args.b or not is_vieta_reduced(seed):
            print("error: --family seed must be a reduced solution for --b", file=sys.stderr)
            return USAGE_ERROR
        inputs |= {"seed": seed.triple(), "depth": args.depth}
        states = family(seed, args.depth)
        if args.format == "table":
            print("\n".join(f"{st.j:3d}  x={st.x}  y={st.y}  z={st.z}" for st in states))
            return 0
        results = {"family": [{"j": st.j, "x": st.x, "y": st.y, "z": st.z} for st in states]}
    _emit({"command": "vieta", "inputs": inputs, "results": results}, started)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    started = time.time()
    try:
        params = tuple(int(v) for v in args.params.split(",")) if args.params else ()
        P = build(ConstructionSpec(args.family, params))
    except (ValueError, NotConstructibleError, DegenerateHullError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(P))
    # bare polygon JSON so the output pipes straight into `certify`
    _emit(P.to_json_dict(), started)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.time()
    if args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; known: {sorted(SUITES)}", file=sys.stderr)
        return USAGE_ERROR
    kwargs = {}
    if args.suite == "b-sweep" and args.bound is not None:
        kwargs["bound"] = args.bound
    if args.suite == "nvar-bound" and args.n is not None:
        kwargs["cases"] = ((args.n, args.bound or 40, args.n * args.n),)
    if args.suite == "family-grid":
        if args.depth is not None:
            kwargs["depth"] = args.depth
        if args.max_width is not None:
            kwargs["width_cap"] = args.max_width
    if args.suite == "properties" and args.count is not None:
        kwargs["count"] = args.count
    result = SUITES[args.suite](**kwargs)
    for line in result.lines():
        print(line)
    print(f"suite {result.name}: {'pass' if result.passed else 'FAIL'}")
    print(f"elapsed_ms={int((time.time() - started) * 1000)}", file=sys.stderr)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipgeom",
        description="Exact lattice geometry of rational polygons.",
    )
    parser.add_argument("--version", action="version", version=f"pipgeom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="decide pseudointegrality of a polygon JSON file")
    p.add_argument("polygon_file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("vieta", help="solution sets of b = (x+y+z)^2/(xyz)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--reduced", action="store_true", help="list the reduced solutions")
    p.add_argument("--forest", action="store_true", help="jump graph up to --max-z")
    p.add_argument("--max-z", type=int, default=None)
    p.add_argument("--family", metavar="X,Y,Z", help="grow the family from a reduced seed")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=_cmd_vieta)

    p = sub.add_parser("construct", help="emit a polygon from a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="", help="comma-separated integer parameters")
    p.add_argument("--svg", metavar="PATH", help="also render the polygon as SVG")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--max-width", type=int, default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
