"""Typed chamber graph and minimal galleries.

Vertices are chamber ids (indices into the label list); each edge carries the
s-index of the wall the two chambers share.  Adjacency testing is pruned to
pairs whose Weyl lengths differ by at most one, which is exact: the Bruhat
class of g^-1 h for adjacent chambers is a simple reflection, so the lengths
of the endpoints can differ by at most one.  An exhaustive mode retains the
full quadratic scan for verification runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import EQUAL, BuildingSpec, neighbor_type_of_quotient
from .labels import ChamberLabel


class DuplicateCosetError(RuntimeError):
    """Two chamber labels name the same coset of B."""


class UnreachableChamberError(RuntimeError):
    """No gallery exists between the requested chambers in the generated ball."""


@dataclass(frozen=True)
class ChamberGraph:
    chamber_count: int
    edges: tuple[tuple[int, int, int], ...]  # (a, b, type) with a < b, sorted
    neighbors: tuple[tuple[tuple[int, int], ...], ...]  # per chamber: (other, type)
    base: int
    radius: int


def build_chamber_graph(
    labels: list[ChamberLabel], spec: BuildingSpec, *, exhaustive: bool = False
) -> ChamberGraph:
    inverses = [lab.matrix.inverse() for lab in labels]
    lengths = [lab.w.length for lab in labels]
    count = len(labels)

    by_length: dict[int, list[int]] = {}
    for idx, ln in enumerate(lengths):
        by_length.setdefault(ln, []).append(idx)

    if exhaustive:
        pairs = ((a, b) for a in range(count) for b in range(a + 1, count))
    else:
        def pruned():
            for ln in sorted(by_length):
                group = by_length[ln]
                for i, a in enumerate(group):
                    for b in group[i + 1 :]:
                        yield a, b
                for a in group:
                    for b in by_length.get(ln + 1, ()):
                        yield (a, b) if a < b else (b, a)

        pairs = pruned()

    edges = []
    for a, b in pairs:
        t = neighbor_type_of_quotient(inverses[a] * labels[b].matrix, spec)
        if t is EQUAL:
            raise DuplicateCosetError(f"chambers {a} and {b} label the same coset")
        if t is not None:
            edges.append((a, b, t))
    edges.sort()

    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(count)]
    for a, b, t in edges:
        adjacency[a].append((b, t))
        adjacency[b].append((a, t))

    base_candidates = [i for i, lab in enumerate(labels) if lab.w.length == 0]
    if len(base_candidates) != 1:
        raise DuplicateCosetError("expected exactly one base chamber with word ()")

    return ChamberGraph(
        chamber_count=count,
        edges=tuple(edges),
        neighbors=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        base=base_candidates[0],
        radius=max(lengths),
    )


def distances_from(graph: ChamberGraph, start: int) -> list[int | None]:
    """BFS distances; None marks chambers outside the component of start."""
    dist: list[int | None] = [None] * graph.chamber_count
    dist[start] = 0
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for nbr, _ in graph.neighbors[c]:
            if dist[nbr] is None:
                dist[nbr] = dist[c] + 1
                queue.append(nbr)
    return dist


def shortest_gallery(graph: ChamberGraph, a: int, b: int) -> tuple[int, tuple[int, ...]]:
    """Gallery distance and the lexicographically least type word among all
    minimal galleries from a to b."""
    if not (0 <= a < graph.chamber_count and 0 <= b < graph.chamber_count):
        raise IndexError("chamber id out of range")
    dist_to_b = distances_from(graph, b)
    if dist_to_b[a] is None:
        raise UnreachableChamberError(f"no gallery from {a} to {b} in the generated ball")
    total = dist_to_b[a]
    word = []
    frontier = {a}
    for remaining in range(total, 0, -1):
        candidates: dict[int, set[int]] = {}
        for c in frontier:
            for nbr, t in graph.neighbors[c]:
                if dist_to_b[nbr] == remaining - 1:
                    candidates.setdefault(t, set()).add(nbr)
        t = min(candidates)
        word.append(t)
        frontier = candidates[t]
    return total, tuple(word)
