#!/usr/bin/env python3
"""Build the showcase scenes into out/: the rank-2 spherical building over
F_2 (the Fano incidence graph), the GL4 building, and affine balls for SL2
and SL3."""

import pathlib
import sys

from buildings import BuildingSpec, Family, build_scene, export_scene

SCENES = [
    ("fano", Family.SPHERICAL_A2, 2, 3, {}),
    ("fano_embedded", Family.SPHERICAL_A2, 2, 3, {"embed_center": True}),
    ("gl4", Family.SPHERICAL_A3, 2, 6, {}),
    ("sl2_tree_d4", Family.AFFINE_A1, 2, 4, {}),
    ("sl3_ball_d3", Family.AFFINE_A2, 2, 3, {}),
]


def main() -> int:
    out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("out")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, family, p, radius, kwargs in SCENES:
        doc = build_scene(BuildingSpec(family, p), radius, **kwargs)
        for fmt in ("json", "obj"):
            path = out_dir / f"{name}.{fmt}"
            path.write_bytes(export_scene(doc, fmt))
            print(f"{path}: {doc.stats}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
