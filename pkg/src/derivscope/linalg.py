"""Exact dense linear algebra over the rationals.

Every scalar is a :class:`fractions.Fraction`; nothing here ever rounds.
Subspaces are stored by their reduced row echelon basis, so two subspaces
are equal as sets exactly when their ``basis`` tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding in.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


@dataclass(frozen=True)
class Matrix:
    """Row-major rational matrix.

    When a square matrix is used as a linear map, column ``j`` holds the
    coordinates of the image of ``e_j``.
    """

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "Matrix":
        data = tuple(vector(r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable], rows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if rows is None:
            if not cols:
                raise ValueError("cannot infer row count of an empty column list")
            rows = len(cols[0])
        if any(len(c) != rows for c in cols):
            raise ValueError("columns have unequal lengths")
        return cls(rows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        vals = vector(values)
        n = len(vals)
        return cls(n, n, tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n))
                               for i in range(n)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.columns()))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not fit {self.rows}x{self.cols}")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0))
                     for r in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        ocols = other.columns()
        return Matrix(self.rows, other.cols,
                      tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                                  for c in ocols) for r in self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r, s))
                            for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.entries)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")

    # column-major flattening: all of column 0, then column 1, ...
    def vectorize(self) -> Vector:
        return tuple(self.entries[i][j] for j in range(self.cols) for i in range(self.rows))

    @classmethod
    def unvectorize(cls, v: Sequence, n: int) -> "Matrix":
        if len(v) != n * n:
            raise ValueError(f"expected {n * n} coordinates, got {len(v)}")
        v = vector(v)
        return cls(n, n, tuple(tuple(v[j * n + i] for j in range(n)) for i in range(n)))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns.

    Pivots are taken as the first nonzero entry going down each column.
    """
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        prow = a[r]
        support = [k for k in range(c, m.cols) if prow[k] != 0]
        for i in range(m.rows):
            if i == r:
                continue
            f = a[i][c]
            if f == 0:
                continue
            row = a[i]
            for k in support:
                row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return Matrix(m.rows, m.cols, tuple(tuple(x) for x in a)), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = Matrix(n, 2 * n, tuple(r + e for r, e in zip(m.entries, Matrix.identity(n).entries)))
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(n, n, tuple(r[n:] for r in red.entries))


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim held by its canonical RREF basis (rows)."""

    ambient_dim: int
    basis: tuple  # tuple of Vector, RREF with increasing pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(k for k, x in enumerate(b) if x != 0) for b in self.basis]

    def basis_matrix(self) -> Matrix:
        return Matrix(self.dim, self.ambient_dim, self.basis)

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the canonical basis; raises if ``v`` is outside."""
        v = vector(v)
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, b in zip(coords, self.basis):
            if c:
                for k, x in enumerate(b):
                    residual[k] -= c * x
        if not is_zero(residual):
            raise ValueError("vector is not in the subspace")
        return coords

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vecs = [vector(v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    if not vecs:
        return Subspace.zero(ambient_dim)
    red, piv = rref(Matrix(len(vecs), ambient_dim, tuple(vecs)))
    return Subspace(ambient_dim, red.entries[:len(piv)])


def nullspace(m: Matrix) -> Subspace:
    red, piv = rref(m)
    pivset = set(piv)
    basis = []
    for f in (c for c in range(m.cols) if c not in pivset):
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -red.entries[r][f]
        basis.append(v)
    return span(basis, m.cols)


def _check_ambient(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    return span(u.basis + w.basis, u.ambient_dim)


def intersect(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    n = u.ambient_dim
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(n)
    # a.U = b.W  <=>  (a, b) in ker [U^T | -W^T]
    cols = list(u.basis) + [tuple(-x for x in b) for b in w.basis]
    kernel = nullspace(Matrix.from_columns(cols, rows=n))
    vecs = []
    for k in kernel.basis:
        acc = [Fraction(0)] * n
        for c, b in zip(k[:u.dim], u.basis):
            if c:
                for i, x in enumerate(b):
                    acc[i] += c * x
        vecs.append(acc)
    return span(vecs, n)


def contains(u: Subspace, v: Sequence) -> bool:
    if len(v) != u.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    try:
        u.coordinates(v)
    except ValueError:
        return False
    return True


def coordinate_complement(u: Subspace) -> Subspace:
    """Span of the standard basis vectors at the non-pivot positions of ``u``."""
    piv = set(u.pivots)
    n = u.ambient_dim
    return Subspace(n, tuple(unit_vector(n, i) for i in range(n) if i not in piv))
