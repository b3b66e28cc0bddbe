"""Canonical coset representatives of G/B within a gallery radius.

For the affine families the chambers of the double coset BwB are parametrised
through the filtration matrix of B: conjugating it by w and reading off
entrywise valuations gives, for every off-diagonal position, the exponent of
the finite root-subgroup quotient contributing to the fiber.  The product of
one representative per position, taken in a fixed row-major order, enumerates
the p^length(w) chambers of the cell.

Spherical families use Schubert coordinates instead: one elementary entry per
inversion position of the permutation w, with coefficients in F_p.

Distinctness of the representatives is verified at generation time rather
than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    BuildingSpec,
    Family,
    Fp,
    Matrix,
    elementary_matrix,
    identity_for,
    is_in_B,
    rational_matrix,
    valuation_pattern,
)
from .weyl import WeylElement, enumerate_weyl


class ProfileInconsistencyError(RuntimeError):
    """The exponent sum of a filtration profile disagrees with the Weyl length.

    This signals a wrong membership pattern or reflection matrix upstream.
    """


class RepresentativeCollisionError(RuntimeError):
    """Two generated representatives name the same coset of B."""


@dataclass(frozen=True)
class FiltrationProfile:
    """Valuation data of B and wBw^-1 read off the filtration matrix."""

    w: WeylElement
    phi_b: tuple[tuple[int, ...], ...]
    phi_wb: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]  # max(phi_wb, phi_b)
    e: tuple[tuple[int, ...], ...]  # r - phi_b; fiber exponent per position


@dataclass(frozen=True)
class ChamberLabel:
    """Representative b * n_w of a coset of B; the fiber index doubles as the
    visual height of the chamber."""

    w: WeylElement
    b: Matrix
    fiber: int
    matrix: Matrix


def filtration_matrix(spec: BuildingSpec) -> Matrix:
    """Element of B whose entries achieve the minimal allowed valuations."""
    p = spec.p
    if spec.family is Family.AFFINE_A2:
        return rational_matrix([[1, 1, 1], [p, p - 1, 1], [p, p, p - 1]])
    if spec.family is Family.AFFINE_A1:
        return rational_matrix([[1, 1], [p, p - 1]])
    raise ValueError(f"{spec.family} has no filtration matrix; spherical families use Schubert coordinates")


def _int_pattern(m: Matrix, p: int) -> tuple[tuple[int, ...], ...]:
    pattern = valuation_pattern(m, p)
    if any(v == float("inf") for row in pattern for v in row):
        raise ProfileInconsistencyError(f"filtration conjugate has a zero entry: {m}")
    return tuple(tuple(int(v) for v in row) for row in pattern)


def filtration_profile(w: WeylElement, spec: BuildingSpec) -> FiltrationProfile:
    if not spec.affine:
        raise ValueError("filtration profiles apply to the affine families only")
    f = filtration_matrix(spec)
    n = spec.n
    phi_b = _int_pattern(f, spec.p)
    phi_wb = _int_pattern(w.matrix * f * w.matrix.inverse(), spec.p)
    r = tuple(
        tuple(max(phi_wb[i][j], phi_b[i][j]) for j in range(n)) for i in range(n)
    )
    e = tuple(tuple(r[i][j] - phi_b[i][j] for j in range(n)) for i in range(n))
    total = sum(e[i][j] for i in range(n) for j in range(n) if i != j)
    if total != w.length:
        raise ProfileInconsistencyError(
            f"exponent sum {total} != length {w.length} for word {w.word}"
        )
    return FiltrationProfile(w, phi_b, phi_wb, r, e)


def _check_distinct(w: WeylElement, reps: list[Matrix], spec: BuildingSpec) -> None:
    n_mat = w.matrix
    n_inv = n_mat.inverse()
    inverses = [b.inverse() for b in reps]
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            if is_in_B(n_inv * inverses[a] * reps[b] * n_mat, spec):
                raise RepresentativeCollisionError(
                    f"representatives {a} and {b} of word {w.word} coincide mod B"
                )


def coset_representatives(w: WeylElement, spec: BuildingSpec) -> list[Matrix]:
    """Ordered transversal of BwB/B; the identity always comes first."""
    n, p = spec.n, spec.p
    factor_lists: list[list[Matrix]] = []
    if spec.affine:
        profile = filtration_profile(w, spec)
        for i in range(n):
            for j in range(n):
                if i == j or profile.e[i][j] == 0:
                    continue
                base = Fraction(p) ** profile.phi_b[i][j]
                factor_lists.append(
                    [
                        elementary_matrix(n, i, j, c * base)
                        for c in range(p ** profile.e[i][j])
                    ]
                )
    else:
        sigma = w.signature.columns
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:  # inversion position of w
                    factor_lists.append(
                        [elementary_matrix(n, i, j, Fp(c, p)) for c in range(p)]
                    )
    if not factor_lists:
        reps = [identity_for(spec)]
    else:
        reps = []
        for combo in itertools.product(*factor_lists):
            m = combo[0]
            for f in combo[1:]:
                m = m * f
            reps.append(m)
    assert len(reps) == p**w.length
    _check_distinct(w, reps, spec)
    return reps


def enumerate_chambers(spec: BuildingSpec, d: int, **weyl_kwargs) -> list[ChamberLabel]:
    """One label per chamber within gallery distance d of the base chamber.

    Ordering is deterministic: Weyl elements sorted by (length, word), then
    fiber index; the total count is the sum of p^length(w) over the ball.
    """
    labels = []
    for w in enumerate_weyl(spec, d, **weyl_kwargs):
        for fiber, b in enumerate(coset_representatives(w, spec)):
            labels.append(ChamberLabel(w, b, fiber, b * w.matrix))
    return labels
