"""Exact scalars, matrices, and the membership patterns behind chamber adjacency.

Four building families are supported: the spherical buildings of GL3 and GL4
over a prime field, and the affine buildings of SL2 and SL3 over the rationals
equipped with a p-adic valuation.  Everything in this module is exact --
rationals are `fractions.Fraction`, prime-field entries are `Fp` residues, and
matrices are immutable tuples of either.  Floats never enter the algebraic
pipeline; they first appear in the geometry layer.

All values are immutable after construction and all operations are pure, so
the module is safe to use from multiple threads without synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

INFINITY = float("inf")

#: Sentinel returned by `bruhat_neighbor_type` when the two labels name the
#: same coset of B.
EQUAL = "equal"


class SingularMatrixError(ZeroDivisionError):
    """Inverse of a non-invertible matrix was requested."""


class DimensionMismatchError(ValueError):
    """Operands of a matrix operation have incompatible dimensions."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# scalars


def int_valuation(n: int, p: int) -> Union[int, float]:
    """Exponent of p in the integer n; INFINITY for n == 0."""
    if n == 0:
        return INFINITY
    n = abs(n)
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def nu_p(q: Union[Fraction, int], p: int) -> Union[int, float]:
    """p-adic valuation of a rational number.

    For q = p^n * a/b with a, b coprime to p this is n; nu_p(0) is INFINITY.

    >>> nu_p(12, 2)
    2
    >>> nu_p(Fraction(3, 8), 2)
    -3
    >>> nu_p(0, 5)
    inf
    """
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def rational_str(q: Fraction) -> str:
    """Canonical "num/den" form, e.g. "3/8", "-1/2", "0/1"."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    if "/" not in s:
        raise ValueError(f"not a canonical rational string: {s!r}")
    return Fraction(s)


@dataclass(frozen=True, slots=True)
class Fp:
    """Residue in the prime field Z/pZ.

    Scalar kinds are kept separate on purpose: mixing Fp with Fraction (or
    with bare ints) raises TypeError instead of coercing.
    """

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: object) -> "Fp":
        if not isinstance(other, Fp) or other.p != self.p:
            raise TypeError(f"cannot combine Fp(p={self.p}) with {other!r}")
        return other

    def __add__(self, other: "Fp") -> "Fp":
        return Fp(self.value + self._check(other).value, self.p)

    def __sub__(self, other: "Fp") -> "Fp":
        return Fp(self.value - self._check(other).value, self.p)

    def __mul__(self, other: "Fp") -> "Fp":
        return Fp(self.value * self._check(other).value, self.p)

    def __truediv__(self, other: "Fp") -> "Fp":
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(other.value, -1, self.p), self.p)

    def __neg__(self) -> "Fp":
        return Fp(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}%{self.p}"


Scalar = Union[Fraction, Fp]


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True, slots=True)
class Matrix:
    """Immutable square matrix over Q or over a prime field."""

    rows: tuple[tuple[Scalar, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def is_rational(self) -> bool:
        return isinstance(self.rows[0][0], Fraction)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def _zero(self) -> Scalar:
        x = self.rows[0][0]
        return Fp(0, x.p) if isinstance(x, Fp) else Fraction(0)

    def _one(self) -> Scalar:
        x = self.rows[0][0]
        return Fp(1, x.p) if isinstance(x, Fp) else Fraction(1)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatchError(f"{self.n}x{self.n} times {other.n}x{other.n}")
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            acc_row = []
            for col in cols:
                acc = row[0] * col[0]
                for x, y in zip(row[1:], col[1:]):
                    acc = acc + x * y
                acc_row.append(acc)
            out.append(tuple(acc_row))
        return Matrix(tuple(out))

    def inverse(self) -> "Matrix":
        n = self.n
        zero, one = self._zero(), self._one()
        a = [list(row) for row in self.rows]
        b = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrixError(str(self))
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            d = a[col][col]
            a[col] = [x / d for x in a[col]]
            b[col] = [x / d for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return Matrix(tuple(tuple(row) for row in b))

    def det(self) -> Scalar:
        n = self.n
        a = [list(row) for row in self.rows]
        out = self._one()
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return self._zero()
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                out = -out
            out = out * a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] / a[col][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return out

    def __str__(self) -> str:
        def fmt(x: Scalar) -> str:
            return rational_str(x) if isinstance(x, Fraction) else str(x.value)

        return "[" + "; ".join(" ".join(fmt(x) for x in row) for row in self.rows) + "]"


def rational_matrix(rows) -> Matrix:
    return Matrix(tuple(tuple(Fraction(x) for x in row) for row in rows))


def fp_matrix(rows, p: int) -> Matrix:
    return Matrix(tuple(tuple(Fp(int(x), p) for x in row) for row in rows))


def identity_matrix(n: int, *, p: int | None = None) -> Matrix:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return rational_matrix(rows) if p is None else fp_matrix(rows, p)


def elementary_matrix(n: int, i: int, j: int, value: Scalar) -> Matrix:
    """Identity with `value` in the off-diagonal position (i, j)."""
    if i == j:
        raise ValueError("elementary position must be off the diagonal")
    if isinstance(value, Fp):
        rows = [[Fp(1 if r == c else 0, value.p) for c in range(n)] for r in range(n)]
    else:
        rows = [[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]
    rows[i][j] = value
    return Matrix(tuple(tuple(r) for r in rows))


def conjugate(w: Matrix, a: Matrix) -> Matrix:
    """w * a * w^-1."""
    return w * a * w.inverse()


def valuation_pattern(a: Matrix, p: int) -> tuple[tuple[Union[int, float], ...], ...]:
    """Entrywise p-adic valuations of a rational matrix."""
    if not a.is_rational:
        raise TypeError("valuation pattern is defined for rational matrices only")
    return tuple(tuple(nu_p(x, p) for x in row) for row in a.rows)


# ---------------------------------------------------------------------------
# building families


class Family(str, Enum):
    SPHERICAL_A2 = "sph-a2"
    SPHERICAL_A3 = "sph-a3"
    AFFINE_A1 = "aff-a1"
    AFFINE_A2 = "aff-a2"

    @property
    def matrix_dim(self) -> int:
        return _FAMILY_DIM[self]

    @property
    def rank(self) -> int:
        return _FAMILY_RANK[self]

    @property
    def affine(self) -> bool:
        return self in (Family.AFFINE_A1, Family.AFFINE_A2)


_FAMILY_DIM = {
    Family.SPHERICAL_A2: 3,
    Family.SPHERICAL_A3: 4,
    Family.AFFINE_A1: 2,
    Family.AFFINE_A2: 3,
}
_FAMILY_RANK = {
    Family.SPHERICAL_A2: 2,
    Family.SPHERICAL_A3: 3,
    Family.AFFINE_A1: 2,
    Family.AFFINE_A2: 3,
}


@dataclass(frozen=True)
class BuildingSpec:
    """A building family together with the prime p.

    Spherical families live over the field with p elements; affine families
    live over Q with the p-adic valuation.
    """

    family: Family
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")

    @property
    def n(self) -> int:
        return self.family.matrix_dim

    @property
    def rank(self) -> int:
        return self.family.rank

    @property
    def affine(self) -> bool:
        return self.family.affine


def identity_for(spec: BuildingSpec) -> Matrix:
    return identity_matrix(spec.n, p=None if spec.affine else spec.p)


def simple_reflections(spec: BuildingSpec) -> tuple[Matrix, ...]:
    """The ordered simple reflections s_0, ..., s_{rank-1} for the family.

    Spherical families use adjacent-transposition permutation matrices.  The
    affine families add the extra reflection that moves a power of p across
    the corners; for SL2 the determinant-one analogues are used.
    """
    p = spec.p
    if spec.family is Family.SPHERICAL_A2:
        return (
            fp_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], p),
            fp_matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]], p),
        )
    if spec.family is Family.SPHERICAL_A3:
        swaps = []
        for i in range(3):
            rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
            rows[i][i] = rows[i + 1][i + 1] = 0
            rows[i][i + 1] = rows[i + 1][i] = 1
            swaps.append(fp_matrix(rows, p))
        return tuple(swaps)
    if spec.family is Family.AFFINE_A1:
        return (
            rational_matrix([[0, 1], [-1, 0]]),
            rational_matrix([[0, Fraction(-1, p)], [p, 0]]),
        )
    return (
        rational_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        rational_matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
        rational_matrix([[0, 0, Fraction(-1, p)], [0, 1, 0], [p, 0, 0]]),
    )


# Valuation constraints: ("ge", k) means nu_p >= k, ("eq", k) means nu_p == k.
_Constraint = tuple[str, int]


def _constraint_ok(v: Union[int, float], c: _Constraint) -> bool:
    kind, k = c
    return v >= k if kind == "ge" else v == k


def _matches(pattern, table) -> bool:
    return all(
        _constraint_ok(v, c) for prow, trow in zip(pattern, table) for v, c in zip(prow, trow)
    )


def _borel_table(n: int):
    """Valuation pattern of the affine B: units on the diagonal, nu >= 0
    above, nu > 0 below."""
    return tuple(
        tuple(("eq", 0) if i == j else (("ge", 0) if i < j else ("ge", 1)) for j in range(n))
        for i in range(n)
    )


# Valuation tables for the double cosets B s_i B in the affine families.
_AFF_A2_CELL_TABLES = {
    0: (
        (("ge", 0), ("ge", 0), ("ge", 0)),
        (("eq", 0), ("ge", 0), ("ge", 0)),
        (("ge", 1), ("ge", 1), ("eq", 0)),
    ),
    1: (
        (("eq", 0), ("ge", 0), ("ge", 0)),
        (("ge", 1), ("ge", 0), ("ge", 0)),
        (("ge", 1), ("eq", 0), ("ge", 0)),
    ),
    2: (
        (("ge", 0), ("ge", 0), ("eq", -1)),
        (("ge", 1), ("eq", 0), ("ge", 0)),
        (("ge", 1), ("ge", 1), ("ge", 0)),
    ),
}

# SL2 analogues, derived by multiplying out b s_i b' over the B pattern.
_AFF_A1_CELL_TABLES = {
    0: (
        (("ge", 0), ("ge", 0)),
        (("eq", 0), ("ge", 0)),
    ),
    1: (
        (("ge", 0), ("eq", -1)),
        (("ge", 1), ("ge", 0)),
    ),
}


def affine_cell_tables(spec: BuildingSpec):
    if spec.family is Family.AFFINE_A2:
        return _AFF_A2_CELL_TABLES
    if spec.family is Family.AFFINE_A1:
        return _AFF_A1_CELL_TABLES
    raise ValueError(f"{spec.family} has no affine cell tables")


def is_in_B(g: Matrix, spec: BuildingSpec) -> bool:
    """Membership in B: upper triangular with nonzero diagonal over F_p, or
    the valuation pattern (diag == 0, above >= 0, below > 0) over Q."""
    n = spec.n
    if spec.affine:
        return _matches(valuation_pattern(g, spec.p), _borel_table(n))
    for i in range(n):
        if not g[i, i]:
            return False
        for j in range(i):
            if g[i, j]:
                return False
    return True


def bruhat_permutation(m: Matrix) -> tuple[int, ...]:
    """The permutation w with m in BwB, over a field.

    Returned in one-line row form: sigma[i] is the column of the single
    nonzero entry in row i of the permutation matrix of w.  Uses the rank
    profile of the lower-left submatrices (rows i.., columns ..j), which both
    upper-triangular factors preserve.
    """
    n = m.n
    counts = [0] * n  # counts[j] = #{i : column j pivots for the row-tail at i}
    for i in range(n):
        work = [list(row) for row in m.rows[i:]]
        rank = 0
        for j in range(n):
            piv = next((r for r in range(rank, len(work)) if work[r][j]), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            lead = work[rank][j]
            for r in range(len(work)):
                if r != rank and work[r][j]:
                    f = work[r][j] / lead
                    work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
            counts[j] += 1
            rank += 1
    sigma = [-1] * n
    for j, c in enumerate(counts):
        row = c - 1
        if row < 0 or sigma[row] != -1:
            raise ValueError(f"rank profile of {m} is not a permutation profile")
        sigma[row] = j
    return tuple(sigma)


def adjacent_transposition(i: int, n: int) -> tuple[int, ...]:
    sigma = list(range(n))
    sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
    return tuple(sigma)


def neighbor_type_of_quotient(m: Matrix, spec: BuildingSpec):
    """Classify m = g^-1 h: EQUAL, an s-index, or None (not adjacent)."""
    if is_in_B(m, spec):
        return EQUAL
    if spec.affine:
        pattern = valuation_pattern(m, spec.p)
        for i, table in affine_cell_tables(spec).items():
            if _matches(pattern, table):
                return i
        return None
    sigma = bruhat_permutation(m)
    for i in range(spec.rank):
        if sigma == adjacent_transposition(i, spec.n):
            return i
    return None


def bruhat_neighbor_type(g: Matrix, h: Matrix, spec: BuildingSpec):
    """Relation of the chambers gB and hB: EQUAL, Adjacent(i) as the integer
    i, or None when they are neither equal nor adjacent."""
    return neighbor_type_of_quotient(g.inverse() * h, spec)
