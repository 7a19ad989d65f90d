"""Point configurations, the Gale transform and its inverse.

The transform of ``n`` points affinely spanning ``R^d`` is the sequence of
columns of a matrix whose rows are a nullspace basis of the lifted
``(d+1) x n`` matrix (each point with a trailing 1).  We always use the
canonical RREF nullspace basis, so the transform is a function rather than
a choice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exact import (ONE, ZERO, Matrix, Vector, dot, inverse, primitive_integer_vector,
                    rank_of_vectors, rref_nullspace, same_row_space, solve, vec, vsum)


class DegenerateConfiguration(ValueError):
    """The points do not span the space the operation requires."""


@dataclass(frozen=True)
class PointConfig:
    """Ordered sequence of rational points in ``R^dim``.

    ``synthetic`` lists (0-based) indices of points added by padding or
    balancing; set families must never reference them.
    """

    dim: int
    points: tuple
    synthetic: frozenset = field(default=frozenset())

    def __init__(self, dim: int, points: Sequence[Sequence], synthetic=()):
        pts = tuple(vec(p) for p in points)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        if dim < 0 or any(len(p) != dim for p in pts):
            raise ValueError(f"all points must have dimension {dim}")
        syn = frozenset(int(i) for i in synthetic)
        if any(not 0 <= i < len(pts) for i in syn):
            raise ValueError("synthetic index out of range")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "synthetic", syn)

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "PointConfig":
        points = list(points)
        return cls(len(points[0]), points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def lifted_matrix(self) -> Matrix:
        """The ``(d+1) x n`` matrix with columns ``(a_j, 1)``."""
        return Matrix.from_columns([p + (ONE,) for p in self.points], self.dim + 1)

    def vector_matrix(self) -> Matrix:
        """The ``dim x n`` matrix with the points as columns."""
        return Matrix.from_columns(self.points, self.dim)

    @property
    def affine_rank(self) -> int:
        return rank_of_vectors([p + (ONE,) for p in self.points], self.dim + 1) - 1

    @property
    def affinely_spans(self) -> bool:
        return self.affine_rank == self.dim

    @property
    def linear_rank(self) -> int:
        return rank_of_vectors(self.points, self.dim)

    @property
    def linearly_spans(self) -> bool:
        return self.linear_rank == self.dim

    def point_sum(self) -> Vector:
        return vsum(self.points, self.dim)


@dataclass(frozen=True)
class LinearHyperplane:
    """``H = <normal>^perp``, normal kept as a primitive integer vector."""

    normal: tuple

    def __init__(self, normal: Sequence):
        object.__setattr__(self, "normal", primitive_integer_vector(normal))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x)

    def side(self, x: Sequence[Fraction]) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)

    def sign_pattern(self, cfg: PointConfig) -> "SignPattern":
        return SignPattern(tuple(self.side(p) for p in cfg.points))


@dataclass(frozen=True)
class SignPattern:
    """Per-point side of a hyperplane: +1, -1 or 0."""

    signs: tuple

    @property
    def plus(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs) if s > 0)

    @property
    def minus(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs) if s < 0)

    @property
    def zeros(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs) if s == 0)

    def flipped(self) -> "SignPattern":
        return SignPattern(tuple(-s for s in self.signs))

    def equal_up_to_sign(self, other: "SignPattern") -> bool:
        return self == other or self == other.flipped()

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.signs)


def gale_matrix(primal: PointConfig) -> list[Vector]:
    """Rows of the dual matrix: canonical nullspace basis of the lifted matrix."""
    if not primal.affinely_spans:
        raise DegenerateConfiguration(
            f"points span an affine subspace of dimension {primal.affine_rank} < {primal.dim}")
    return rref_nullspace(primal.lifted_matrix())


def gale_transform(primal: PointConfig) -> PointConfig:
    rows = gale_matrix(primal)
    r = primal.n - primal.dim - 1
    assert len(rows) == r
    return PointConfig(r, [tuple(row[j] for row in rows) for j in range(primal.n)])


def _check_dual(dual: PointConfig) -> None:
    if any(dual.point_sum()):
        raise DegenerateConfiguration("dual points do not sum to zero")
    if not dual.linearly_spans:
        raise DegenerateConfiguration(
            f"dual points span a subspace of dimension {dual.linear_rank} < {dual.dim}")


def inverse_gale(dual: PointConfig) -> PointConfig:
    """A primal configuration whose Gale transform has the row space of ``dual``.

    The dual rows are completed to a basis of ``Q^n`` by standard vectors in
    ascending index order; the columns of the inverse belonging to the added
    rows span the orthogonal complement of the dual row space.  The all-ones
    vector is swapped into that basis and the remaining vectors become the
    primal coordinates.
    """
    _check_dual(dual)
    n, r = dual.n, dual.dim
    d = n - r - 1
    dual_rows = [tuple(p[i] for p in dual.points) for i in range(r)]
    completed = list(dual_rows)
    for i in range(n):
        if len(completed) == n:
            break
        e = tuple(ONE if j == i else ZERO for j in range(n))
        if rank_of_vectors(completed + [e], n) == len(completed) + 1:
            completed.append(e)
    inv = inverse(Matrix(completed, ncols=n))
    complement = [inv.column(j) for j in range(r, n)]
    ones = (ONE,) * n
    coeffs = solve(Matrix.from_columns(complement, n), ones)
    assert coeffs is not None
    swap = next(i for i, c in enumerate(coeffs) if c)
    coord_rows = [w for i, w in enumerate(complement) if i != swap]
    primal = PointConfig(d, [tuple(w[j] for w in coord_rows) for j in range(n)])
    if not same_row_space(gale_matrix(primal), dual_rows, n):
        raise ArithmeticError("inverse Gale reconstruction failed its row-space check")
    return primal


def same_dual_row_space(a: PointConfig, b: PointConfig) -> bool:
    """Do two dual configurations (same ``n``) have equal row spaces?"""
    if a.n != b.n:
        return False
    rows_a = [tuple(p[i] for p in a.points) for i in range(a.dim)]
    rows_b = [tuple(p[i] for p in b.points) for i in range(b.dim)]
    return same_row_space(rows_a, rows_b, a.n)


class Balanced(NamedTuple):
    config: PointConfig
    padding: tuple
    closing: int | None


def _padding_candidates(dim: int):
    # height-1 points e_i / 2^(i+1), then the height-1 origin; affinely independent
    for i in range(dim - 1):
        yield tuple(Fraction(1, 2 ** (i + 1)) if j == i else ZERO for j in range(dim - 1)) + (ONE,)
    yield (ZERO,) * (dim - 1) + (ONE,)


def balance(vectors: Sequence[Sequence], dim: int) -> Balanced:
    """Pad to full linear rank, then append minus the sum of all points.

    When the padded points already sum to zero the closing point would be
    the origin; it is omitted and ``closing`` is ``None``.
    """
    pts = [vec(v) for v in vectors]
    if not pts:
        raise ValueError("balance needs at least one point")
    padding = []
    current = rank_of_vectors(pts, dim)
    if current < dim:
        for cand in _padding_candidates(dim):
            if rank_of_vectors(pts + [cand], dim) > current:
                padding.append(len(pts))
                pts.append(cand)
                current += 1
                if current == dim:
                    break
    total = vsum(pts, dim)
    closing = None
    if any(total):
        closing = len(pts)
        pts.append(tuple(-a for a in total))
    synthetic = list(padding) + ([closing] if closing is not None else [])
    return Balanced(PointConfig(dim, pts, synthetic), tuple(padding), closing)


def center_and_lift(Y: PointConfig) -> Balanced:
    """Embed ``y -> (y, 1)``, pad to span ``R^{d+1}`` and close to zero sum."""
    return balance([p + (ONE,) for p in Y.points], Y.dim + 1)
