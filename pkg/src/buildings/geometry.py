"""Floating-point realization: reflection footprints, wall-vertex merging,
and height/radial separation of stacked chambers.

All mathematics upstream of this module is exact; positions here are
presentation-only 64-bit floats.  Reflections are involutions to ~1e-15, the
merge step rejects identified vertices whose footprints differ by more than
1e-6, and tests hold the pipeline to 1e-9.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .algebra import BuildingSpec, Family
from .graph import ChamberGraph, distances_from
from .labels import ChamberLabel
from .weyl import WeylSignature

logger = logging.getLogger(__name__)

MERGE_TOLERANCE = 1e-6


class IdentificationConflictError(RuntimeError):
    """Vertices merged across a shared wall disagree on their footprint."""


@dataclass(frozen=True)
class LayoutParams:
    height_step: float = 0.25
    radial_step: float = 0.12


@dataclass(frozen=True, eq=False)
class AffineIsometry:
    """x -> linear @ x + offset acting on rows of an (k, 3) array."""

    linear: np.ndarray
    offset: np.ndarray

    def apply(self, points: np.ndarray) -> np.ndarray:
        return points @ self.linear.T + self.offset

    def after(self, inner: "AffineIsometry") -> "AffineIsometry":
        """Composition self o inner."""
        return AffineIsometry(
            self.linear @ inner.linear, self.linear @ inner.offset + self.offset
        )


def _identity_map() -> AffineIsometry:
    return AffineIsometry(np.eye(3), np.zeros(3))


def _reflection_across_line(p: np.ndarray, q: np.ndarray) -> AffineIsometry:
    """Reflection of the z = 0 plane across the line through p and q."""
    d = (q - p)[:2]
    d = d / np.linalg.norm(d)
    m2 = 2.0 * np.outer(d, d) - np.eye(2)
    linear = np.eye(3)
    linear[:2, :2] = m2
    offset = np.zeros(3)
    offset[:2] = p[:2] - m2 @ p[:2]
    return AffineIsometry(linear, offset)


def _reflection_across_point(x0: float) -> AffineIsometry:
    linear = np.diag([-1.0, 1.0, 1.0])
    return AffineIsometry(linear, np.array([2.0 * x0, 0.0, 0.0]))


@dataclass(frozen=True, eq=False)
class ReflectionModel:
    """Base chamber vertices, wall membership per type, and the reflection
    fixing each wall."""

    spec: BuildingSpec
    base_vertices: np.ndarray  # (rank, 3)
    wall_slots: tuple[tuple[int, ...], ...]  # per type: base vertex slots on the wall
    reflections: tuple[AffineIsometry, ...]

    @property
    def rank(self) -> int:
        return len(self.base_vertices)

    def cotype(self, slot: int) -> tuple[int, ...]:
        return tuple(t for t, slots in enumerate(self.wall_slots) if slot in slots)


def _a3_model(spec: BuildingSpec) -> ReflectionModel:
    # Orthonormal basis of the sum-zero hyperplane of R^4; the symmetric group
    # permuting coordinates acts orthogonally in these coordinates.
    basis = np.array(
        [
            [1.0, -1.0, 0.0, 0.0],
            [1.0, 1.0, -2.0, 0.0],
            [1.0, 1.0, 1.0, -3.0],
        ]
    )
    basis /= np.linalg.norm(basis, axis=1, keepdims=True)

    verts = []
    for k in (1, 2, 3):
        w = np.array([1.0] * k + [0.0] * (4 - k)) - k / 4.0
        v = basis @ w
        verts.append(v / np.linalg.norm(v))
    base = np.array(verts)

    reflections = []
    for i in range(3):
        perm = np.eye(4)
        perm[[i, i + 1]] = perm[[i + 1, i]]
        reflections.append(AffineIsometry(basis @ perm @ basis.T, np.zeros(3)))

    wall_slots = tuple(tuple(s for s in range(3) if s != i) for i in range(3))
    return ReflectionModel(spec, base, wall_slots, tuple(reflections))


def base_geometry(spec: BuildingSpec) -> ReflectionModel:
    """Hard-coded base chamber and wall reflections per family.

    The wall-type assignment is conventional; any consistent choice yields a
    congruent picture.  For the affine rank-3 family the two spherical wall
    types pass through the origin vertex and the extra type is the far wall.
    """
    fam = spec.family
    if fam is Family.AFFINE_A2:
        v0 = np.array([0.0, 0.0, 0.0])
        v1 = np.array([1.0, 0.0, 0.0])
        v2 = np.array([0.5, np.sqrt(3.0) / 2.0, 0.0])
        base = np.array([v0, v1, v2])
        wall_slots = ((0, 1), (0, 2), (1, 2))
        reflections = (
            _reflection_across_line(v0, v1),
            _reflection_across_line(v0, v2),
            _reflection_across_line(v1, v2),
        )
        return ReflectionModel(spec, base, wall_slots, reflections)
    if fam is Family.AFFINE_A1:
        base = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
        return ReflectionModel(
            spec,
            base,
            ((0,), (1,)),
            (_reflection_across_point(0.0), _reflection_across_point(1.0)),
        )
    if fam is Family.SPHERICAL_A2:
        # Two unit-circle points 60 degrees apart; wall i is the vertex the
        # reflection s_i fixes, i.e. the slot other than i.
        v0 = np.array([1.0, 0.0, 0.0])
        v1 = np.array([0.5, np.sqrt(3.0) / 2.0, 0.0])
        base = np.array([v0, v1])
        origin = np.zeros(3)
        reflections = (
            _reflection_across_line(origin, v1),
            _reflection_across_line(origin, v0),
        )
        return ReflectionModel(spec, base, ((1,), (0,)), reflections)
    return _a3_model(spec)


def footprint_for_word(word, model: ReflectionModel) -> np.ndarray:
    """Base chamber carried along the word: for s_{i1}..s_{ir} the composite
    rho(s_{i1}) o ... o rho(s_{ir}) is applied to the base vertices."""
    acc = _identity_map()
    for i in word:
        acc = acc.after(model.reflections[i])
    return acc.apply(model.base_vertices)


@dataclass(frozen=True)
class RealizedVertex:
    id: int
    footprint: tuple[float, float, float]
    height: int
    position: tuple[float, float, float]
    cotype: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Realization:
    vertices: tuple[RealizedVertex, ...]
    chamber_vertex_ids: tuple[tuple[int, ...], ...]  # per chamber, per slot
    chamber_heights: tuple[int, ...]
    radius: int
    merge_deviation: float  # worst footprint disagreement among merged slots
    gate_ties: int  # vertices whose closest containing chamber was not unique


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def realize(
    graph: ChamberGraph,
    labels: list[ChamberLabel],
    model: ReflectionModel,
    layout: LayoutParams = LayoutParams(),
) -> Realization:
    """Positions for every chamber vertex.

    Footprints come from the Weyl word (so all chambers of one fiber stack
    over the same spot), vertices are identified across shared walls with a
    union-find, the height of a vertex is the height of its closest containing
    chamber, and the final position separates stacked vertices vertically
    (affine) or radially (spherical).
    """
    rank = model.rank
    count = len(labels)
    spherical = not model.spec.affine

    footprints_by_sig: dict[WeylSignature, np.ndarray] = {}
    chamber_fp = []
    for lab in labels:
        sig = lab.w.signature
        fp = footprints_by_sig.get(sig)
        if fp is None:
            fp = footprint_for_word(lab.w.word, model)
            footprints_by_sig[sig] = fp
        chamber_fp.append(fp)

    uf = _UnionFind(count * rank)
    for a, b, t in graph.edges:
        for slot in model.wall_slots[t]:
            uf.union(a * rank + slot, b * rank + slot)

    vertex_id: dict[int, int] = {}
    members: list[list[tuple[int, int]]] = []
    chamber_vertex_ids = []
    for c in range(count):
        ids = []
        for slot in range(rank):
            root = uf.find(c * rank + slot)
            vid = vertex_id.get(root)
            if vid is None:
                vid = len(members)
                vertex_id[root] = vid
                members.append([])
            members[vid].append((c, slot))
            ids.append(vid)
        chamber_vertex_ids.append(tuple(ids))

    dist = distances_from(graph, graph.base)
    heights = [lab.fiber for lab in labels]

    vertices = []
    merge_deviation = 0.0
    gate_ties = 0
    for vid, mem in enumerate(members):
        c0, slot0 = mem[0]
        anchor = chamber_fp[c0][slot0]
        for c, slot in mem[1:]:
            dev = float(np.max(np.abs(chamber_fp[c][slot] - anchor)))
            merge_deviation = max(merge_deviation, dev)
            if dev > MERGE_TOLERANCE:
                raise IdentificationConflictError(
                    f"vertex {vid}: chambers {c0} and {c} disagree by {dev:.3g}"
                )
        d_star = min(dist[c] for c, _ in mem)
        gates = sorted({c for c, _ in mem if dist[c] == d_star})
        if len(gates) > 1:
            gate_ties += 1
            logger.warning(
                "vertex %d: %d chambers at minimal distance %d; using minimal height",
                vid,
                len(gates),
                d_star,
            )
        height = min(heights[c] for c in gates)
        if spherical:
            position = anchor * (1.0 + height * layout.radial_step)
        else:
            position = anchor + np.array([0.0, 0.0, height * layout.height_step])
        vertices.append(
            RealizedVertex(
                id=vid,
                footprint=tuple(float(x) for x in anchor),
                height=height,
                position=tuple(float(x) for x in position),
                cotype=model.cotype(slot0),
            )
        )

    return Realization(
        vertices=tuple(vertices),
        chamber_vertex_ids=tuple(chamber_vertex_ids),
        chamber_heights=tuple(heights),
        radius=graph.radius,
        merge_deviation=merge_deviation,
        gate_ties=gate_ties,
    )
