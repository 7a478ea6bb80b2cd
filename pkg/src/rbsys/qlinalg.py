"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices act on column vectors, so
column ``j`` of an operator matrix is the image of the j-th basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def q(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use 'p/q' strings")
    return Fraction(x)


def qstr(x: Fraction) -> str:
    return str(x)


def vec(xs: Iterable) -> Vector:
    return tuple(q(x) for x in xs)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence[Fraction]) -> Vector:
    c = q(c)
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class Matrix:
    rows: tuple[Vector, ...]
    ncols: int

    @classmethod
    def of(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        rs = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rs:
                raise DimensionMismatch("cannot infer the column count of an empty matrix")
            ncols = len(rs[0])
        if any(len(r) != ncols for r in rs):
            raise DimensionMismatch("ragged rows")
        return cls(rs, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def zero(cls, m: int, n: int | None = None) -> "Matrix":
        n = m if n is None else n
        return cls(tuple(zero_vec(n) for _ in range(m)), n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [vec(c) for c in cols]
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def T(self) -> "Matrix":
        return Matrix(tuple(self.columns()), self.nrows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        return Matrix(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix(tuple(vscale(c, r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def to_strings(self) -> list[list[str]]:
        return [[qstr(x) for x in r] for r in self.rows]


def rref(M: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns (first nonzero pivoting)."""
    rows = [list(r) for r in M.rows]
    pivots = []
    r = 0
    for c in range(M.ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix(tuple(tuple(x) for x in rows), M.ncols), len(pivots), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^dim held by its (unique) reduced echelon basis."""

    dim_ambient: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return contains(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def matrix(self) -> Matrix:
        return Matrix(self.basis, self.dim_ambient)

    def to_strings(self) -> list[list[str]]:
        return [[qstr(x) for x in r] for r in self.basis]


def span(vectors: Iterable[Sequence], dim: int) -> Subspace:
    vs = [vec(v) for v in vectors]
    if any(len(v) != dim for v in vs):
        raise DimensionMismatch(f"vectors must have length {dim}")
    if not vs:
        return Subspace(dim, (), ())
    R, rank, piv = rref(Matrix(tuple(vs), dim))
    return Subspace(dim, R.rows[:rank], piv)


def zero_space(dim: int) -> Subspace:
    return Subspace(dim, (), ())


def full_space(dim: int) -> Subspace:
    return span([unit_vec(dim, i) for i in range(dim)], dim)


def kernel(M: Matrix) -> Subspace:
    """Null space ``{v : M v = 0}``."""
    R, rank, piv = rref(M)
    free = [c for c in range(M.ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R.rows[i][f]
        basis.append(v)
    K = span(basis, M.ncols)
    assert K.dim + rank == M.ncols
    return K


def image(M: Matrix) -> Subspace:
    """Column space of ``M``."""
    return span(M.columns(), M.nrows)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def _same_ambient(U: Subspace, W: Subspace) -> None:
    if U.dim_ambient != W.dim_ambient:
        raise DimensionMismatch(f"ambient dimensions {U.dim_ambient} and {W.dim_ambient}")


def contains(U: Subspace, v: Sequence) -> bool:
    v = vec(v)
    if len(v) != U.dim_ambient:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient {U.dim_ambient}")
    return span(list(U.basis) + [v], U.dim_ambient).dim == U.dim


def equal(U: Subspace, W: Subspace) -> bool:
    _same_ambient(U, W)
    return U.basis == W.basis


def is_subspace_of(U: Subspace, W: Subspace) -> bool:
    _same_ambient(U, W)
    return all(contains(W, v) for v in U.basis)


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    return span(list(U.basis) + list(W.basis), U.dim_ambient)


def orthogonal(U: Subspace) -> Subspace:
    """``{v : <u, v> = 0 for all u in U}`` under the standard pairing."""
    if U.dim == 0:
        return full_space(U.dim_ambient)
    return kernel(U.matrix())


def subspace_intersect(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    n = U.dim_ambient
    ann = list(orthogonal(U).basis) + list(orthogonal(W).basis)
    X = kernel(Matrix(tuple(ann), n)) if ann else full_space(n)
    S = subspace_sum(U, W)
    assert U.dim + W.dim == S.dim + X.dim
    return X


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``M x = b`` (free variables set to zero), or None."""
    b = vec(b)
    if len(b) != M.nrows:
        raise DimensionMismatch(f"rhs of length {len(b)} for {M.shape} matrix")
    aug = Matrix(tuple(r + (bi,) for r, bi in zip(M.rows, b)), M.ncols + 1)
    R, rk, piv = rref(aug)
    if piv and piv[-1] == M.ncols:
        return None
    x = [Fraction(0)] * M.ncols
    for i, p in enumerate(piv):
        x[p] = R.rows[i][M.ncols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if M.ncols != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = Matrix(tuple(r + unit_vec(n, i) for i, r in enumerate(M.rows)), 2 * n)
    R, rk, piv = rref(aug)
    if piv[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix(tuple(r[n:] for r in R.rows), n)


def coordinates(basis: Sequence[Sequence[Fraction]], v: Sequence) -> Vector | None:
    """Coefficients of ``v`` in a linearly independent list, or None if outside the span."""
    if not basis:
        return () if is_zero(vec(v)) else None
    return solve(Matrix.from_columns(basis, len(basis[0])), v)


def extend_basis(sub: Sequence[Sequence[Fraction]], by: Iterable[Sequence[Fraction]], dim: int) -> list[Vector]:
    """Vectors of ``by`` (in order) that enlarge the span of ``sub``."""
    current = span(sub, dim)
    added = []
    for v in by:
        if not contains(current, v):
            added.append(vec(v))
            current = span(list(current.basis) + [v], dim)
    return added
