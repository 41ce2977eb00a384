"""Anti-commutative algebras given by structure constants.

An :class:`Algebra` stores ``c_ij^k`` only for ``i < j``; the products
``mu(e_j, e_i) = -mu(e_i, e_j)`` and ``mu(e_i, e_i) = 0`` are implied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    as_rational,
    inverse,
    is_zero,
    nullspace,
    rank,
    span,
    unit_vector,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class Algebra:
    dim: int
    constants: Mapping = field(default_factory=dict)  # (i, j) -> Vector, i < j
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        # Normalise to exact rationals and drop zero products so that
        # structural equality means equality of laws.
        norm = {}
        for key, vec in dict(self.constants).items():
            v = vector(vec)
            if not is_zero(v):
                norm[tuple(key)] = v
        object.__setattr__(self, "constants", dict(sorted(norm.items())))

    def __hash__(self):
        return hash((self.dim, tuple(self.constants.items())))

    @classmethod
    def from_products(cls, dim: int, products: Mapping, name: str | None = None) -> "Algebra":
        """Build from ``{(i, j): {k: value}}`` with sparse output coordinates."""
        consts = {}
        for (i, j), out in products.items():
            v = [Fraction(0)] * dim
            for k, c in out.items():
                v[k] += as_rational(c)
            consts[(i, j)] = v
        return cls(dim, consts, name)

    def validate(self) -> list[str]:
        problems = []
        for (i, j), v in self.constants.items():
            if not (0 <= i < j < self.dim):
                problems.append(f"key ({i},{j}) violates 0 <= i < j < {self.dim}")
            if len(v) != self.dim:
                problems.append(f"key ({i},{j}) has vector of length {len(v)}, expected {self.dim}")
        return problems

    def basis_product(self, i: int, j: int) -> Vector:
        if i < j:
            return self.constants.get((i, j), zero_vector(self.dim))
        if i > j:
            v = self.constants.get((j, i))
            return tuple(-x for x in v) if v is not None else zero_vector(self.dim)
        return zero_vector(self.dim)

    def table(self) -> list:
        """Dense ``table[i][j][k] = c_ij^k`` including the implied entries."""
        n = self.dim
        return [[self.basis_product(i, j) for j in range(n)] for i in range(n)]

    def label(self) -> str:
        return self.name or f"algebra(dim={self.dim})"

    def renamed(self, name: str) -> "Algebra":
        return Algebra(self.dim, self.constants, name)


def validate(a: Algebra) -> list[str]:
    return a.validate()


def _check_vec(a: Algebra, *vs):
    for v in vs:
        if len(v) != a.dim:
            raise ValueError(f"vector of length {len(v)} for algebra of dimension {a.dim}")


def product(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    _check_vec(a, x, y)
    x, y = vector(x), vector(y)
    out = [Fraction(0)] * a.dim
    for (i, j), c in a.constants.items():
        w = x[i] * y[j] - x[j] * y[i]
        if w:
            for k, ck in enumerate(c):
                if ck:
                    out[k] += w * ck
    return tuple(out)


def jacobiator(a: Algebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    _check_vec(a, x, y, z)
    terms = (product(a, x, product(a, y, z)),
             product(a, y, product(a, z, x)),
             product(a, z, product(a, x, y)))
    return tuple(sum(t) for t in zip(*terms))


def jacobi_defects(a: Algebra) -> list[tuple]:
    """Basis triples ``i < j < k`` whose jacobiator is nonzero, with its value."""
    n = a.dim
    es = [unit_vector(n, i) for i in range(n)]
    bad = []
    for i, j, k in combinations(range(n), 3):
        J = jacobiator(a, es[i], es[j], es[k])
        if not is_zero(J):
            bad.append(((i, j, k), J))
    return bad


def is_lie(a: Algebra) -> bool:
    return not jacobi_defects(a)


def product_subspace(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    if u.ambient_dim != a.dim or w.ambient_dim != a.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    return span([product(a, x, y) for x in u.basis for y in w.basis], a.dim)


def derived_algebra(a: Algebra) -> Subspace:
    return span(a.constants.values(), a.dim)


def is_perfect(a: Algebra) -> bool:
    return derived_algebra(a).dim == a.dim


def lower_central_second(a: Algebra) -> Subspace:
    """The term ``mu(A^(2), A)`` below the derived algebra."""
    return product_subspace(a, derived_algebra(a), Subspace.full(a.dim))


def centralizer(a: Algebra, generators: Sequence[Sequence]) -> Subspace:
    """All X with mu(X, g) = 0 for each generator g."""
    n = a.dim
    _check_vec(a, *generators)
    if not generators:
        return Subspace.full(n)
    # column i of the block for g is mu(e_i, g)
    rows = []
    for g in generators:
        cols = [product(a, unit_vector(n, i), g) for i in range(n)]
        rows.extend(tuple(c[k] for c in cols) for k in range(n))
    return nullspace(Matrix(len(rows), n, tuple(rows)))


def center(a: Algebra) -> Subspace:
    return centralizer(a, [unit_vector(a.dim, i) for i in range(a.dim)])


def abelian(n: int) -> Algebra:
    return Algebra(n, {}, f"K^{n}")


def direct_product(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    n = a.dim + b.dim
    consts = {}
    for (i, j), v in a.constants.items():
        consts[(i, j)] = tuple(v) + zero_vector(b.dim)
    for (i, j), v in b.constants.items():
        consts[(a.dim + i, a.dim + j)] = zero_vector(a.dim) + tuple(v)
    if name is None:
        name = f"{a.label()}x{b.label()}"
    return Algebra(n, consts, name)


def one_dim_extension(t_map: Matrix, name: str | None = None) -> Algebra:
    """Semidirect product K x_T K^m with the extending generator at index 0."""
    if not t_map.is_square:
        raise ValueError("extension map must be square")
    m = t_map.rows
    consts = {}
    for i in range(m):
        consts[(0, 1 + i)] = (Fraction(0),) + t_map.column(i)
    return Algebra(m + 1, consts, name)


def change_of_basis(a: Algebra, g: Matrix) -> Algebra:
    """The transported law ``(g.mu)(X, Y) = g mu(g^-1 X, g^-1 Y)``."""
    if not g.is_square or g.rows != a.dim:
        raise ValueError("change of basis must be a square matrix of the algebra dimension")
    if rank(g) != g.rows:
        raise ValueError("change of basis matrix is singular")
    n = a.dim
    ginv_cols = inverse(g).columns()
    consts = {}
    for i, j in combinations(range(n), 2):
        consts[(i, j)] = g.apply(product(a, ginv_cols[i], ginv_cols[j]))
    return Algebra(n, consts, a.name)


def deformed_product(a: Algebra, lam: Algebra, s) -> Algebra:
    """Pointwise ``mu + s * lambda``."""
    if a.dim != lam.dim:
        raise ValueError("laws have different dimensions")
    s = as_rational(s)
    consts = {k: list(v) for k, v in a.constants.items()}
    for k, v in lam.constants.items():
        base = consts.setdefault(k, [Fraction(0)] * a.dim)
        for idx, x in enumerate(v):
            base[idx] += s * x
    return Algebra(a.dim, consts, a.name)


def structure_vector(a: Algebra) -> Vector:
    """Flatten the law as ``c_ij^k`` over pairs i<j (lexicographic), then k."""
    out = []
    for i, j in combinations(range(a.dim), 2):
        out.extend(a.basis_product(i, j))
    return tuple(out)


def law_from_vector(v: Sequence, n: int, name: str | None = None) -> Algebra:
    pairs = list(combinations(range(n), 2))
    if len(v) != len(pairs) * n:
        raise ValueError(f"expected {len(pairs) * n} structure constants, got {len(v)}")
    v = vector(v)
    return Algebra(n, {p: v[idx * n:(idx + 1) * n] for idx, p in enumerate(pairs)}, name)
