"""Enumeration of Weyl-group elements as monomial-matrix cosets of the torus.

Elements are deduplicated by a signature: the support permutation of the
monomial matrix, plus the valuation of each nonzero entry for the affine
families.  The torus (diagonal matrices with unit entries) preserves both, so
the signature is a faithful name for the coset nT.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    BuildingSpec,
    Matrix,
    identity_for,
    nu_p,
    simple_reflections,
)


class ResourceCapError(RuntimeError):
    """A generation request exceeded the configured size cap."""


#: Affine Weyl groups are infinite; enumeration beyond this radius must be
#: requested explicitly.
DEFAULT_AFFINE_RADIUS_CAP = 8


@dataclass(frozen=True)
class WeylSignature:
    """Canonical name of a coset nT."""

    columns: tuple[int, ...]  # column of the nonzero entry in each row
    valuations: tuple[int, ...] | None  # per-row entry valuation; affine only


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    signature: WeylSignature
    length: int
    word: tuple[int, ...]  # reduced word in s-indices


def signature_of(m: Matrix, spec: BuildingSpec) -> WeylSignature:
    n = m.n
    columns = []
    valuations = []
    for i in range(n):
        nonzero = [j for j in range(n) if m[i, j]]
        if len(nonzero) != 1:
            raise ValueError(f"not a monomial matrix: {m}")
        j = nonzero[0]
        columns.append(j)
        if spec.affine:
            v = nu_p(m[i, j], spec.p)
            valuations.append(int(v))
    return WeylSignature(tuple(columns), tuple(valuations) if spec.affine else None)


def enumerate_weyl(
    spec: BuildingSpec,
    d: int,
    *,
    affine_radius_cap: int = DEFAULT_AFFINE_RADIUS_CAP,
) -> list[WeylElement]:
    """All Weyl elements of length <= d, sorted by (length, reduced word).

    Breadth-first closure from the identity under right multiplication by the
    simple reflections.  The stored reduced word is the lexicographically
    smallest among the first-discovered BFS parents, which makes downstream
    geometry deterministic.
    """
    if d < 0:
        raise ValueError("radius must be nonnegative")
    if spec.affine and d > affine_radius_cap:
        raise ResourceCapError(
            f"affine radius {d} exceeds the cap {affine_radius_cap}"
        )
    reflections = simple_reflections(spec)
    ident = identity_for(spec)
    root = WeylElement(ident, signature_of(ident, spec), 0, ())
    seen = {root.signature}
    out = [root]
    layer = [root]
    for length in range(1, d + 1):
        found: dict[WeylSignature, tuple[tuple[int, ...], Matrix]] = {}
        for parent in layer:  # layer is word-sorted, so first hit = lex least
            for i, s in enumerate(reflections):
                mat = parent.matrix * s
                sig = signature_of(mat, spec)
                if sig in seen or sig in found:
                    continue
                found[sig] = (parent.word + (i,), mat)
        if not found:
            break
        layer = [
            WeylElement(mat, sig, length, word) for sig, (word, mat) in found.items()
        ]
        layer.sort(key=lambda w: w.word)
        seen.update(found)
        out.extend(layer)
    return out


def word_to_matrix(word, spec: BuildingSpec) -> Matrix:
    """Exact product of simple reflections along the word; () is the identity."""
    reflections = simple_reflections(spec)
    m = identity_for(spec)
    for i in word:
        m = m * reflections[i]
    return m
