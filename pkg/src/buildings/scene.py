"""Deterministic scene documents: the contract between the core and the viewer.

A scene document serializes the realized building: vertices with positions,
chambers with their exact labels (canonical rational strings), and typed
edges.  Output is byte-identical across runs of the same build: key order is
fixed, arrays are sorted by id, and positions are rounded to nine significant
digits before serialization (which makes re-export of a parsed scene
idempotent).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import BuildingSpec, Family, Fp, Matrix, rational_str
from .geometry import LayoutParams, base_geometry, realize
from .graph import ChamberGraph, build_chamber_graph, distances_from
from .labels import enumerate_chambers

SCHEMA_VERSION = 1


class SceneFormatError(ValueError):
    """A scene document failed schema validation; the message names the field."""


@dataclass(frozen=True)
class SceneVertex:
    id: int
    pos: tuple[float, float, float]
    cotype: tuple[int, ...]
    height: int


@dataclass(frozen=True)
class SceneChamber:
    id: int
    word: tuple[int, ...]
    fiber: int
    height: int
    label: tuple[str, ...]  # row-major canonical rational strings
    vertex_ids: tuple[int, ...]


@dataclass(frozen=True)
class SceneEdge:
    a: int
    b: int
    type: int


@dataclass(frozen=True)
class SceneDocument:
    family: str
    p: int
    radius: int
    height_step: float
    radial_step: float
    embed_center: bool
    vertices: tuple[SceneVertex, ...]
    chambers: tuple[SceneChamber, ...]
    edges: tuple[SceneEdge, ...]
    stats: dict = field(default_factory=dict)


def _round9(x: float) -> float:
    return float(format(x + 0.0, ".9g"))


def _label_strings(m: Matrix) -> tuple[str, ...]:
    out = []
    for row in m.rows:
        for x in row:
            out.append(f"{x.value}/1" if isinstance(x, Fp) else rational_str(x))
    return tuple(out)


def build_scene(
    spec: BuildingSpec,
    radius: int,
    layout: LayoutParams = LayoutParams(),
    *,
    exhaustive: bool = False,
    embed_center: bool = False,
    **weyl_kwargs,
) -> SceneDocument:
    """Run the full pipeline and assemble the scene document."""
    if embed_center and spec.family is not Family.SPHERICAL_A2:
        raise ValueError("--embed-center applies to the rank-2 spherical family only")
    labels = enumerate_chambers(spec, radius, **weyl_kwargs)
    graph = build_chamber_graph(labels, spec, exhaustive=exhaustive)
    model = base_geometry(spec)
    real = realize(graph, labels, model, layout)

    vertices = [
        SceneVertex(
            id=v.id,
            pos=tuple(_round9(x) for x in v.position),
            cotype=v.cotype,
            height=v.height,
        )
        for v in real.vertices
    ]
    if embed_center:
        # Extra central vertex showing the spherical building as the link of
        # a vertex of the corresponding affine building.
        vertices.append(
            SceneVertex(id=len(vertices), pos=(0.0, 0.0, 0.0), cotype=(), height=0)
        )

    chambers = [
        SceneChamber(
            id=i,
            word=lab.w.word,
            fiber=lab.fiber,
            height=real.chamber_heights[i],
            label=_label_strings(lab.matrix),
            vertex_ids=real.chamber_vertex_ids[i],
        )
        for i, lab in enumerate(labels)
    ]
    edges = [SceneEdge(a, b, t) for a, b, t in graph.edges]

    dist = distances_from(graph, graph.base)
    stats = {
        "chamber_count": len(chambers),
        "vertex_count": len(vertices),
        "edge_count": len(edges),
        "max_distance_from_base": max(d for d in dist if d is not None),
    }
    return SceneDocument(
        family=spec.family.value,
        p=spec.p,
        radius=radius,
        height_step=layout.height_step,
        radial_step=layout.radial_step,
        embed_center=embed_center,
        vertices=tuple(vertices),
        chambers=tuple(chambers),
        edges=tuple(edges),
        stats=stats,
    )


def scene_to_json_bytes(doc: SceneDocument) -> bytes:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "spec": {
            "family": doc.family,
            "p": doc.p,
            "radius": doc.radius,
            "height_step": _round9(doc.height_step),
            "radial_step": _round9(doc.radial_step),
            "embed_center": doc.embed_center,
        },
        "vertices": [
            {
                "id": v.id,
                "pos": [_round9(x) for x in v.pos],
                "cotype": list(v.cotype),
                "height": v.height,
            }
            for v in doc.vertices
        ],
        "chambers": [
            {
                "id": c.id,
                "word": list(c.word),
                "fiber": c.fiber,
                "height": c.height,
                "label": list(c.label),
                "vertex_ids": list(c.vertex_ids),
            }
            for c in doc.chambers
        ],
        "edges": [{"a": e.a, "b": e.b, "type": e.type} for e in doc.edges],
        "stats": doc.stats,
    }
    return (json.dumps(payload, indent=2) + "\n").encode()


def scene_to_obj_bytes(doc: SceneDocument) -> bytes:
    """Wavefront OBJ: v lines for vertices, l lines for 1-dim chambers,
    f lines for 2-dim chambers (and for the center fan in embed mode)."""
    lines = [
        f"# building scene family={doc.family} p={doc.p} radius={doc.radius}",
        f"# chambers={doc.stats['chamber_count']} vertices={doc.stats['vertex_count']}"
        f" edges={doc.stats['edge_count']}",
    ]
    for v in doc.vertices:
        x, y, z = (format(c + 0.0, ".9g") for c in v.pos)
        lines.append(f"v {x} {y} {z}")
    center = len(doc.vertices) if doc.embed_center else None
    for c in doc.chambers:
        lines.append(f"# chamber {c.id}")
        ids = [i + 1 for i in c.vertex_ids]  # OBJ indices are 1-based
        if len(ids) == 3:
            lines.append("f " + " ".join(str(i) for i in ids))
        elif doc.embed_center:
            lines.append(f"f {ids[0]} {ids[1]} {center}")
        else:
            lines.append("l " + " ".join(str(i) for i in ids))
    return ("\n".join(lines) + "\n").encode()


def export_scene(doc: SceneDocument, fmt: str) -> bytes:
    if fmt == "json":
        return scene_to_json_bytes(doc)
    if fmt == "obj":
        return scene_to_obj_bytes(doc)
    raise ValueError(f"unknown format {fmt!r}")


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise SceneFormatError(f"{path}: {message}")


def parse_scene(data: bytes) -> SceneDocument:
    """Parse and validate a JSON scene document.

    Validation covers structure and referential integrity: dense zero-based
    ids, chamber vertex references, and edge chamber references.
    """
    try:
        raw = json.loads(data.decode())
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SceneFormatError(f"$: not a JSON document ({exc})") from exc
    _expect(isinstance(raw, dict), "$", "expected an object")
    _expect(raw.get("schema_version") == SCHEMA_VERSION, "$.schema_version", f"expected {SCHEMA_VERSION}")

    spec = raw.get("spec")
    _expect(isinstance(spec, dict), "$.spec", "expected an object")
    for key, typ in (
        ("family", str),
        ("p", int),
        ("radius", int),
        ("height_step", (int, float)),
        ("radial_step", (int, float)),
        ("embed_center", bool),
    ):
        _expect(isinstance(spec.get(key), typ), f"$.spec.{key}", "missing or wrong type")
    _expect(
        spec["family"] in {f.value for f in Family},
        "$.spec.family",
        f"unknown family {spec['family']!r}",
    )

    for section in ("vertices", "chambers", "edges", "stats"):
        _expect(section in raw, f"$.{section}", "missing")

    vertices = []
    for i, v in enumerate(raw["vertices"]):
        path = f"$.vertices[{i}]"
        _expect(isinstance(v, dict), path, "expected an object")
        _expect(v.get("id") == i, f"{path}.id", "ids must be dense and sorted")
        pos = v.get("pos")
        _expect(
            isinstance(pos, list) and len(pos) == 3 and all(isinstance(x, (int, float)) for x in pos),
            f"{path}.pos",
            "expected [x, y, z]",
        )
        _expect(isinstance(v.get("height"), int), f"{path}.height", "expected an integer")
        cotype = v.get("cotype")
        _expect(
            isinstance(cotype, list) and all(isinstance(x, int) for x in cotype),
            f"{path}.cotype",
            "expected a list of wall types",
        )
        vertices.append(
            SceneVertex(i, tuple(float(x) for x in pos), tuple(cotype), v["height"])
        )

    chambers = []
    for i, c in enumerate(raw["chambers"]):
        path = f"$.chambers[{i}]"
        _expect(isinstance(c, dict), path, "expected an object")
        _expect(c.get("id") == i, f"{path}.id", "ids must be dense and sorted")
        for key in ("word", "label", "vertex_ids"):
            _expect(isinstance(c.get(key), list), f"{path}.{key}", "expected a list")
        for k, vid in enumerate(c["vertex_ids"]):
            _expect(
                isinstance(vid, int) and 0 <= vid < len(vertices),
                f"{path}.vertex_ids[{k}]",
                f"unknown vertex {vid}",
            )
        for k, s in enumerate(c["label"]):
            _expect(isinstance(s, str) and "/" in s, f"{path}.label[{k}]", "expected num/den")
        _expect(isinstance(c.get("fiber"), int), f"{path}.fiber", "expected an integer")
        _expect(isinstance(c.get("height"), int), f"{path}.height", "expected an integer")
        chambers.append(
            SceneChamber(
                i,
                tuple(c["word"]),
                c["fiber"],
                c["height"],
                tuple(c["label"]),
                tuple(c["vertex_ids"]),
            )
        )

    edges = []
    for i, e in enumerate(raw["edges"]):
        path = f"$.edges[{i}]"
        _expect(isinstance(e, dict), path, "expected an object")
        for key in ("a", "b", "type"):
            _expect(isinstance(e.get(key), int), f"{path}.{key}", "expected an integer")
        for key in ("a", "b"):
            _expect(
                0 <= e[key] < len(chambers), f"{path}.{key}", f"unknown chamber {e[key]}"
            )
        edges.append(SceneEdge(e["a"], e["b"], e["type"]))

    stats = raw["stats"]
    _expect(isinstance(stats, dict), "$.stats", "expected an object")
    for key in ("chamber_count", "vertex_count", "edge_count", "max_distance_from_base"):
        _expect(isinstance(stats.get(key), int), f"$.stats.{key}", "missing or wrong type")
    _expect(stats["chamber_count"] == len(chambers), "$.stats.chamber_count", "count mismatch")
    _expect(stats["vertex_count"] == len(vertices), "$.stats.vertex_count", "count mismatch")
    _expect(stats["edge_count"] == len(edges), "$.stats.edge_count", "count mismatch")

    return SceneDocument(
        family=spec["family"],
        p=spec["p"],
        radius=spec["radius"],
        height_step=float(spec["height_step"]),
        radial_step=float(spec["radial_step"]),
        embed_center=spec["embed_center"],
        vertices=tuple(vertices),
        chambers=tuple(chambers),
        edges=tuple(edges),
        stats={k: stats[k] for k in ("chamber_count", "vertex_count", "edge_count", "max_distance_from_base")},
    )


def scene_graph(doc: SceneDocument) -> ChamberGraph:
    """Rebuild a chamber graph from a scene's edge list (for path queries)."""
    adjacency: list[list[tuple[int, int]]] = [[] for _ in doc.chambers]
    for e in doc.edges:
        adjacency[e.a].append((e.b, e.type))
        adjacency[e.b].append((e.a, e.type))
    base_candidates = [c.id for c in doc.chambers if not c.word and c.fiber == 0]
    base = base_candidates[0] if base_candidates else 0
    return ChamberGraph(
        chamber_count=len(doc.chambers),
        edges=tuple((e.a, e.b, e.type) for e in doc.edges),
        neighbors=tuple(tuple(sorted(n)) for n in adjacency),
        base=base,
        radius=doc.radius,
    )
