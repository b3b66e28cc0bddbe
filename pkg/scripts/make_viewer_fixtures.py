#!/usr/bin/env python3
"""Regenerate the frontend test fixtures: the Fano scene plus the core's
gallery distance and word for every ordered chamber pair.  The viewer's
in-browser search must reproduce these exactly."""

import json
import pathlib
import sys

from buildings import (
    BuildingSpec,
    Family,
    build_scene,
    export_scene,
    scene_graph,
    shortest_gallery,
)


def main() -> int:
    out_dir = (
        pathlib.Path(sys.argv[1])
        if len(sys.argv) > 1
        else pathlib.Path(__file__).resolve().parent.parent / "frontend" / "fixtures"
    )
    out_dir.mkdir(parents=True, exist_ok=True)

    doc = build_scene(BuildingSpec(Family.SPHERICAL_A2, 2), 3)
    (out_dir / "fano.json").write_bytes(export_scene(doc, "json"))

    affine = build_scene(BuildingSpec(Family.AFFINE_A2, 2), 1)
    (out_dir / "sl3_d1.json").write_bytes(export_scene(affine, "json"))

    graph = scene_graph(doc)
    pairs = []
    for a in range(graph.chamber_count):
        for b in range(graph.chamber_count):
            dist, word = shortest_gallery(graph, a, b)
            pairs.append([a, b, dist, list(word)])
    payload = {"scene": "fano.json", "pairs": pairs}
    (out_dir / "fano_paths.json").write_text(json.dumps(payload) + "\n")
    print(f"wrote {out_dir / 'fano.json'} and {len(pairs)} path fixtures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
