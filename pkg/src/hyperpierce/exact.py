"""Exact rational linear algebra.

Everything downstream (Gale transforms, Radon certificates, piercing
witnesses) is computed over :class:`fractions.Fraction`; there is no
floating point anywhere in the package.

Vectors are plain tuples of ``Fraction``.  :class:`Matrix` is an immutable
dense grid of the same.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string exactly.

    Floats are rejected; silently converting a binary float would defeat the
    point of certificates that re-verify exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational string: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def vsum(vectors: Iterable[Sequence[Fraction]], dim: int) -> Vector:
    acc = [ZERO] * dim
    for v in vectors:
        for i, a in enumerate(v):
            acc[i] += a
    return tuple(acc)


def combination(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], dim: int) -> Vector:
    """Return ``sum(c_i * v_i)`` in dimension ``dim``."""
    acc = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                acc[i] += c * a
    return tuple(acc)


def primitive_integer_vector(v: Sequence[Fraction]) -> Vector:
    """Scale a nonzero rational vector to coprime integers, first nonzero positive."""
    v = vec(v)
    if not any(v):
        raise ValueError("zero vector has no canonical direction")
    lcm = 1
    for a in v:
        lcm = lcm * a.denominator // gcd(lcm, a.denominator)
    ints = [int(a * lcm) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    first = next(a for a in ints if a)
    if first < 0:
        ints = [-a for a in ints]
    return tuple(Fraction(a) for a in ints)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix with immutable shape and entries."""

    rows: tuple
    ncols: int

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        grid = tuple(vec(r) for r in rows)
        if ncols is None:
            if not grid:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(grid[0])
        for r in grid:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", grid)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [vec(c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("ragged matrix columns")
        return cls([tuple(c[i] for c in cols) for i in range(nrows)], ncols=len(cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], ncols=n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.columns(), ncols=self.nrows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} does not match {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.columns()
        return Matrix([[dot(r, c) for c in cols] for r in self.rows], ncols=other.ncols)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns the nonzero rows of the RREF and the pivot column of each.
    Pivot search scans columns left to right and takes the first row with a
    nonzero entry, so the result is canonical for the row space.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pivot_row = work[r]
        inv = 1 / pivot_row[c]
        if inv != 1:
            pivot_row = [a * inv for a in pivot_row]
            work[r] = pivot_row
        for i in range(nrows):
            if i != r:
                f = work[i][c]
                if f:
                    row_i = work[i]
                    work[i] = [a - f * b if b else a for a, b in zip(row_i, pivot_row)]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.rows, M.ncols)[1])


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]], dim: int) -> int:
    return len(rref(vectors, dim)[1])


def rref_nullspace(M: Matrix) -> list[Vector]:
    """Canonical nullspace basis of ``M`` read off its RREF.

    Free columns are taken in ascending order and each basis vector carries
    a 1 in its own free position and 0 in the other free positions.
    """
    if M.ncols < 1:
        raise ValueError("matrix must have at least one column")
    R, pivots = rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * M.ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(M: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of ``M x = b`` (free variables set to 0), or None."""
    if len(b) != M.nrows:
        raise ValueError("right-hand side length does not match matrix rows")
    aug = [list(r) + [to_rational(bi)] for r, bi in zip(M.rows, b)]
    R, pivots = rref(aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [ZERO] * M.ncols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if n != M.ncols:
        raise ValueError("only square matrices are invertible")
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(M.rows)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in R], ncols=n)


def same_row_space(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]], ncols: int) -> bool:
    """True when the two row lists span the same subspace of Q^ncols."""
    RA, _ = rref(A, ncols)
    RB, _ = rref(B, ncols)
    return RA == RB
