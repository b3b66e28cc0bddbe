"""Acceptance suite: one test per release criterion, each printing a
pass/fail line.  Tolerances are pinned here: combinatorial counts are exact,
reflection/footprint agreement is 1e-9, and exports must be byte-identical.

Run with `pytest tests/test_acceptance.py -v -s`.
"""

import itertools
import time
from collections import Counter

import numpy as np
import pytest

from buildings import (
    BuildingSpec,
    Family,
    base_geometry,
    build_chamber_graph,
    build_scene,
    coset_representatives,
    distances_from,
    enumerate_chambers,
    enumerate_weyl,
    export_scene,
    filtration_profile,
    footprint_for_word,
    identity_matrix,
    is_in_B,
    bruhat_neighbor_type,
    realize,
    signature_of,
    verify_case,
    word_to_matrix,
)


def _report(name: str, ok: bool, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{mark}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def _max_pairwise_distance(graph) -> int:
    return max(
        max(d for d in distances_from(graph, c) if d is not None)
        for c in range(graph.chamber_count)
    )


def test_fano_reproduction():
    start = time.perf_counter()
    spec = BuildingSpec(Family.SPHERICAL_A2, 2)
    labels = enumerate_chambers(spec, 3)
    graph = build_chamber_graph(labels, spec)
    real = realize(graph, labels, base_geometry(spec))
    elapsed = time.perf_counter() - start

    degree = Counter()
    for a, b, _ in graph.edges:
        degree[a] += 1
        degree[b] += 1
    ok = (
        len(labels) == 21
        and len(real.vertices) == 14
        and len(graph.edges) == 42
        and set(degree.values()) == {4}
        and _max_pairwise_distance(graph) == 3
        and elapsed < 1.0
    )
    _report(
        "Fano reproduction: 21 chambers, 14 vertices, 42 edges, 4-regular, diameter 3",
        ok,
        f"{elapsed:.3f}s",
    )


def test_gl4_building():
    start = time.perf_counter()
    spec = BuildingSpec(Family.SPHERICAL_A3, 2)
    labels = enumerate_chambers(spec, 6)
    graph = build_chamber_graph(labels, spec)
    real = realize(graph, labels, base_geometry(spec))
    elapsed = time.perf_counter() - start

    ok = (
        len(labels) == 315
        and len(real.vertices) == 65
        and len(graph.edges) == 945
        and _max_pairwise_distance(graph) == 6
        and elapsed < 30.0
    )
    _report(
        "GL4 building: 315 chambers, 65 vertices, 945 edges, diameter 6",
        ok,
        f"{elapsed:.1f}s",
    )


def test_affine_growth():
    counts2 = [
        len(enumerate_chambers(BuildingSpec(Family.AFFINE_A2, 2), d))
        for d in range(4)
    ]
    count3 = len(enumerate_chambers(BuildingSpec(Family.AFFINE_A2, 3), 2))
    ok = counts2 == [1, 7, 31, 103] and count3 == 64
    _report(
        "Affine growth: cumulative counts 1, 7, 31, 103 (p=2) and 64 (p=3, d=2)",
        ok,
        f"got {counts2} and {count3}",
    )


def test_affine_a1_tree():
    spec = BuildingSpec(Family.AFFINE_A1, 2)
    ok = True
    detail = []
    for d in (1, 2, 3, 4):
        labels = enumerate_chambers(spec, d)
        graph = build_chamber_graph(labels, spec)
        expected = 1 + sum(2 * 2**r for r in range(1, d + 1))
        ok = ok and len(labels) == expected

        real = realize(graph, labels, base_geometry(spec))
        # panels are the merged wall vertices; the chamber-panel incidence of
        # a tree building is acyclic and connected
        parent = list(range(len(real.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for ids in real.chamber_vertex_ids:
            ra, rb = find(ids[0]), find(ids[1])
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        components = len({find(v) for v in range(len(real.vertices))})
        ok = ok and acyclic and components == 1

        # interior panels (containing a chamber at distance < d) have p+1 = 3
        # chambers
        dist = distances_from(graph, graph.base)
        chambers_of_panel = {}
        for c, ids in enumerate(real.chamber_vertex_ids):
            for vid in ids:
                chambers_of_panel.setdefault(vid, []).append(c)
        for vid, chambers in chambers_of_panel.items():
            if min(dist[c] for c in chambers) < d:
                ok = ok and len(chambers) == 3
        detail.append(f"d={d}: {len(labels)} chambers")
    _report("Affine A1 tree: counts and acyclic panel incidence", ok, "; ".join(detail))


def test_oracle_equivalence():
    r32 = verify_case(3, 2)
    r33 = verify_case(3, 3)
    ok = r32.passed and r33.passed and r33.seconds < 60.0
    failures = [c.name for r in (r32, r33) for c in r.checks if not c.passed]
    _report(
        "Oracle equivalence: brute force matches the pipeline for (3,2) and (3,3)",
        ok,
        f"(3,3) in {r33.seconds:.1f}s" + (f"; failing: {failures}" if failures else ""),
    )


def test_affine_representative_soundness():
    ok = True
    for p in (2, 3):
        spec = BuildingSpec(Family.AFFINE_A2, p)
        e = identity_matrix(3)
        for w in enumerate_weyl(spec, 4):
            profile = filtration_profile(w, spec)
            total = sum(
                profile.e[i][j] for i in range(3) for j in range(3) if i != j
            )
            ok = ok and total == w.length
            reps = coset_representatives(w, spec)  # raises on coset collision
            ok = ok and len(reps) == p**w.length
            ok = ok and all(is_in_B(b, spec) for b in reps)
            if w.length == 1:
                (i,) = w.word
                ok = ok and all(
                    bruhat_neighbor_type(e, b * w.matrix, spec) == i for b in reps
                )
    _report(
        "Affine representatives: exponent sums, fiber sizes p^l, distinct cosets,"
        " length-1 valuation tables",
        ok,
    )


def test_geometry_invariants():
    ok = True
    details = []

    # reflection involutions within 1e-9
    probe = np.array([[0.2, 0.4, 0.0], [-1.3, 0.9, 0.0]])
    for family in Family:
        model = base_geometry(BuildingSpec(family, 2))
        for rho in model.reflections:
            dev = np.max(np.abs(rho.apply(rho.apply(probe)) - probe))
            ok = ok and dev < 1e-9

    # footprint independent of the reduced word within 1e-9
    for family, horizon in ((Family.SPHERICAL_A3, 6), (Family.AFFINE_A2, 4)):
        spec = BuildingSpec(family, 2)
        model = base_geometry(spec)
        lengths = {w.signature: w.length for w in enumerate_weyl(spec, horizon)}
        anchors = {}
        for length in range(horizon + 1):
            for word in itertools.product(range(spec.rank), repeat=length):
                sig = signature_of(word_to_matrix(word, spec), spec)
                if lengths.get(sig) != length:
                    continue
                fp = footprint_for_word(word, model)
                anchor = anchors.setdefault(sig, fp)
                ok = ok and float(np.max(np.abs(fp - anchor))) < 1e-9

    # fiber-0 apartment flat at height 0 with interior-disjoint footprints
    spec = BuildingSpec(Family.AFFINE_A2, 2)
    labels = enumerate_chambers(spec, 3)
    graph = build_chamber_graph(labels, spec)
    model = base_geometry(spec)
    real = realize(graph, labels, model)
    centroids = []
    for i, lab in enumerate(labels):
        if lab.fiber == 0:
            verts = [real.vertices[v] for v in real.chamber_vertex_ids[i]]
            ok = ok and all(v.height == 0 and v.position[2] == 0.0 for v in verts)
            centroids.append(np.mean([v.position for v in verts], axis=0))
    min_sep = min(
        np.linalg.norm(a - b)
        for i, a in enumerate(centroids)
        for b in centroids[i + 1 :]
    )
    ok = ok and min_sep > 0.5
    details.append(f"apartment centroid separation {min_sep:.3f}")

    # shared-wall vertices merged to identical ids
    for a, b, t in graph.edges:
        for slot in model.wall_slots[t]:
            ok = ok and (
                real.chamber_vertex_ids[a][slot] == real.chamber_vertex_ids[b][slot]
            )
    ok = ok and real.merge_deviation < 1e-9
    details.append(f"merge deviation {real.merge_deviation:.2e}")

    # re-runs byte-identical
    for family, p, d in ((Family.SPHERICAL_A2, 2, 3), (Family.AFFINE_A2, 2, 2)):
        one = export_scene(build_scene(BuildingSpec(family, p), d), "json")
        two = export_scene(build_scene(BuildingSpec(family, p), d), "json")
        ok = ok and one == two

    _report("Geometry invariants: involutions, word independence, flat apartment,"
            " exact wall sharing, deterministic export", ok, "; ".join(details))
