"""Command-line interface.

Subcommands: `build` (generate a scene), `stats` (print a scene's stats
block), `path` (gallery distance and type word between two chambers of a
scene), `verify` (run the brute-force oracle checks).

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import BuildingSpec, Family
from .geometry import LayoutParams
from .graph import UnreachableChamberError, shortest_gallery
from .oracle import verify_case
from .scene import SceneFormatError, build_scene, export_scene, parse_scene, scene_graph
from .weyl import ResourceCapError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_RESOURCE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2)
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="buildings", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="generate a building scene")
    build.add_argument("--family", required=True, choices=[f.value for f in Family])
    build.add_argument("--p", required=True, type=int, help="prime")
    build.add_argument("--radius", required=True, type=int, help="gallery radius d")
    build.add_argument("--height-step", type=float, default=0.25)
    build.add_argument("--radial-step", type=float, default=0.12)
    build.add_argument("--embed-center", action="store_true")
    build.add_argument("--exhaustive-adjacency", action="store_true")
    build.add_argument("--affine-cap", type=int, default=8, help="max affine radius")
    build.add_argument("--format", choices=["json", "obj"], default="json")
    build.add_argument("--out", required=True, type=Path)

    stats = sub.add_parser("stats", help="print the stats block of a scene")
    stats.add_argument("--scene", required=True, type=Path)

    path = sub.add_parser("path", help="gallery distance and word between chambers")
    path.add_argument("--scene", required=True, type=Path)
    path.add_argument("--from", dest="src", required=True, type=int)
    path.add_argument("--to", dest="dst", required=True, type=int)

    verify = sub.add_parser("verify", help="run brute-force oracle checks")
    verify.add_argument(
        "--case",
        action="append",
        default=None,
        help="n,p (default: both 3,2 and 3,3)",
    )
    verify.add_argument("--json-out", type=Path, default=None)
    return parser


def _cmd_build(args: argparse.Namespace) -> int:
    spec = BuildingSpec(Family(args.family), args.p)
    if args.radius < 0:
        raise _UsageError("radius must be nonnegative")
    layout = LayoutParams(height_step=args.height_step, radial_step=args.radial_step)
    doc = build_scene(
        spec,
        args.radius,
        layout,
        exhaustive=args.exhaustive_adjacency,
        embed_center=args.embed_center,
        affine_radius_cap=args.affine_cap,
    )
    args.out.write_bytes(export_scene(doc, args.format))
    print(
        f"wrote {args.out}: {doc.stats['chamber_count']} chambers, "
        f"{doc.stats['vertex_count']} vertices, {doc.stats['edge_count']} edges"
    )
    return EXIT_OK


def _load_scene(path: Path):
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    return parse_scene(data)


def _cmd_stats(args: argparse.Namespace) -> int:
    doc = _load_scene(args.scene)
    print(json.dumps(doc.stats, indent=2))
    return EXIT_OK


def _cmd_path(args: argparse.Namespace) -> int:
    doc = _load_scene(args.scene)
    graph = scene_graph(doc)
    if not (0 <= args.src < graph.chamber_count and 0 <= args.dst < graph.chamber_count):
        raise _UsageError("chamber id out of range")
    distance, word = shortest_gallery(graph, args.src, args.dst)
    print(f"{distance}, {json.dumps(list(word))}")
    return EXIT_OK


def _parse_case(text: str) -> tuple[int, int]:
    try:
        n, p = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad case {text!r}; expected n,p") from exc
    return n, p


def _cmd_verify(args: argparse.Namespace) -> int:
    cases = [_parse_case(c) for c in args.case] if args.case else [(3, 2), (3, 3)]
    reports = [verify_case(n, p) for n, p in cases]
    for report in reports:
        print(f"verify case ({report.n},{report.p}) [{report.seconds:.2f}s]")
        for check in report.checks:
            mark = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"  [{mark}] {check.name}{detail}")
    if args.json_out is not None:
        payload = {
            "passed": all(r.passed for r in reports),
            "cases": [
                {
                    "n": r.n,
                    "p": r.p,
                    "seconds": r.seconds,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "detail": c.detail}
                        for c in r.checks
                    ],
                }
                for r in reports
            ],
        }
        args.json_out.write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFICATION


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "path":
            return _cmd_path(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, SceneFormatError, UnreachableChamberError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
