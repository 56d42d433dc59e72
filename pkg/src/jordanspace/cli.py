"""Command line entry point.  JSON goes to stdout; errors exit 2, failed checks 1."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import curve_space, jordan
from .enumerate import EnumerationLimit, count_grid_cycles, enumerate_curves
from .homotopy import minimalize, morph
from .jordan import CurveError, JordanCurve
from .paths import GeodesicOverflow, distance, geodesics
from .planes import KHALIMSKY, TOPOLOGIES, DigitalPlane
from .poset import OrderError

GRID_CYCLE_MAX = 10


class UsageError(ValueError):
    pass


def dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def load_json(text_or_path: str):
    """Accept inline JSON or a path to a JSON file."""
    text = text_or_path.strip()
    if not text.startswith(("{", "[")):
        path = Path(text_or_path)
        if not path.exists():
            raise UsageError(f"no such file: {text_or_path}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"bad JSON: {err}") from err


def parse_point(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError as err:
        raise UsageError(f"expected i,j but got {text!r}") from err
    return i, j


def add_plane_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--plane", help="plane JSON, inline or a file path")
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--topology", choices=TOPOLOGIES, default=KHALIMSKY)
    p.add_argument("--x-parity", type=int, default=0, help="columns with this parity are closed")
    p.add_argument("--y-parity", type=int, default=0, help="rows with this parity are closed")
    p.add_argument("--mw-parity", type=int, default=0, help="Marcus-Wyse: i+j with this parity is closed")


def plane_from_args(args) -> DigitalPlane:
    if args.plane:
        return DigitalPlane.from_json(load_json(args.plane))
    if args.width is None or args.height is None:
        raise UsageError("give --plane or both --width and --height")
    return DigitalPlane(args.width, args.height, args.topology, args.x_parity, args.y_parity, args.mw_parity)


def curve_from_file(path: str) -> JordanCurve:
    return JordanCurve.from_json(load_json(path))


def emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def coords(plane: DigitalPlane, pts) -> list[list[int]]:
    return [list(plane.coord(p)) for p in sorted(pts)]


# -- commands ------------------------------------------------------------


def cmd_plane_info(args) -> int:
    plane = plane_from_args(args)
    if args.format == "json":
        emit(args, dump({"plane": plane.to_json(), "rows": plane.render().split("\n")}))
    else:
        emit(args, plane.render())
    return 0


def cmd_enumerate(args) -> int:
    plane = plane_from_args(args)
    curves = enumerate_curves(plane)
    if args.format == "count":
        emit(args, dump({"count": len(curves)}))
    else:
        data = {"plane": plane.to_json(), "curves": [c.to_json()["points"] for c in curves]}
        emit(args, dump(data))
    return 0


def cmd_hasse(args) -> int:
    cs = curve_space.build_poset(plane_from_args(args))
    if args.format == "json":
        emit(args, dump(curve_space.to_json(cs)))
    elif args.format == "report":
        emit(args, dump(curve_space.space_report(cs)))
    else:
        emit(args, curve_space.to_dot(cs))
    return 0


def cmd_check(args) -> int:
    data = load_json(args.curve)
    plane = DigitalPlane.from_json(data["plane"])
    pts = [plane.point(*map(int, ij)) for ij in data["points"]]
    if not jordan.is_jordan_curve(plane.space, pts) or len(set(pts)) != len(pts):
        emit(args, dump({"valid": False}))
        return 2
    curve = JordanCurve.from_points(plane, pts)
    checks = jordan.lemma_checks(curve)
    emit(
        args,
        dump(
            {
                "valid": True,
                "length": len(curve),
                "interior_size": len(curve.interior),
                "minimal": curve.is_minimal(),
                "checks": checks,
            }
        ),
    )
    return 0 if all(c["holds"] for c in checks) else 1


def cmd_interior(args) -> int:
    curve = curve_from_file(args.curve)
    plane = curve.plane
    emit(args, dump({"interior": coords(plane, curve.interior), "exterior": coords(plane, curve.exterior)}))
    return 0


def cmd_render(args) -> int:
    emit(args, jordan.render(curve_from_file(args.curve)))
    return 0


def _metric_inputs(args):
    plane = plane_from_args(args)
    x = plane.point(*parse_point(args.source))
    y = plane.point(*parse_point(args.target))
    within = None
    if args.within:
        curve = curve_from_file(args.within)
        if curve.plane != plane:
            raise UsageError("curve and plane differ")
        within = curve.interior if args.within_interior else curve.point_set
        if x not in within or y not in within:
            raise UsageError("both points must lie in the chosen subspace")
    return plane, x, y, within


def cmd_distance(args) -> int:
    plane, x, y, within = _metric_inputs(args)
    d = distance(plane, x, y, within)
    emit(args, dump({"distance": "inf" if d == float("inf") else int(d)}))
    return 0


def cmd_geodesics(args) -> int:
    plane, x, y, within = _metric_inputs(args)
    paths = geodesics(plane, x, y, within)
    emit(args, dump({"count": len(paths), "geodesics": [[list(plane.coord(p)) for p in g] for g in paths]}))
    return 0


def cmd_minimalize(args) -> int:
    curve = curve_from_file(args.curve)
    base = curve.plane.point(*parse_point(args.basepoint)) if args.basepoint else None
    fence, _ = minimalize(curve, base)
    fence.validate()
    emit(args, dump(fence.to_json()))
    return 0


def cmd_morph(args) -> int:
    a, b = curve_from_file(args.source), curve_from_file(args.target)
    fence = morph(a, b)
    fence.validate()
    if args.render == "ascii":
        emit(args, "\n\n".join(jordan.render(c) for c in fence.curves))
    else:
        emit(args, dump(fence.to_json()))
    return 0


def cmd_grid_cycles(args) -> int:
    if not 0 <= args.n <= GRID_CYCLE_MAX:
        raise UsageError(f"n must lie in 0..{GRID_CYCLE_MAX}")
    emit(args, dump({"count": count_grid_cycles(args.n)}))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_all

    outcomes = run_all(args.only or None)
    for o in outcomes:
        print(o.line(), flush=True)
    passed = sum(o.ok for o in outcomes)
    print(f"{passed}/{len(outcomes)} criteria passed")
    return 0 if passed == len(outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jordanspace", description="Digital Jordan curves and their curve spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    plane = sub.add_parser("plane", help="plane utilities")
    plane_sub = plane.add_subparsers(dest="plane_command", required=True)
    info = plane_sub.add_parser("info", help="print the point classes of a plane")
    add_plane_options(info)
    info.add_argument("--format", choices=("ascii", "json"), default="ascii")
    info.add_argument("--out")
    info.set_defaults(func=cmd_plane_info)

    p = sub.add_parser("enumerate", help="list every Jordan curve of a plane")
    add_plane_options(p)
    p.add_argument("--format", choices=("json", "count"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="Hasse diagram of the curve space")
    add_plane_options(p)
    p.add_argument("--format", choices=("dot", "json", "report"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hasse)

    for name, func, text in (
        ("check", cmd_check, "validate a curve and run structural checks"),
        ("interior", cmd_interior, "interior and exterior of a curve"),
        ("render", cmd_render, "ASCII picture of a curve"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("curve", help="curve JSON file")
        p.add_argument("--out")
        p.set_defaults(func=func)

    for name, func in (("distance", cmd_distance), ("geodesics", cmd_geodesics)):
        p = sub.add_parser(name, help=f"{name} between two points")
        add_plane_options(p)
        p.add_argument("--from", dest="source", required=True, metavar="I,J")
        p.add_argument("--to", dest="target", required=True, metavar="I,J")
        p.add_argument("--within", metavar="CURVE", help="restrict to the points of this curve")
        p.add_argument("--within-interior", action="store_true", help="use the curve's interior instead")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("minimalize", help="fence from a curve down to a minimal curve")
    p.add_argument("curve")
    p.add_argument("--basepoint", metavar="I,J")
    p.add_argument("--out")
    p.set_defaults(func=cmd_minimalize)

    p = sub.add_parser("morph", help="fence between two curves")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--render", choices=("json", "ascii"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("grid-cycles", help="simple cycles in the (n+1)x(n+1) grid graph")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid_cycles)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", type=int, nargs="*", metavar="N")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CurveError, OrderError, EnumerationLimit, GeodesicOverflow, ValueError, KeyError) as err:
        print(dump({"error": str(err)}), file=sys.stderr)
        return 2
    except AssertionError as err:
        print(dump({"assertion": str(err)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
