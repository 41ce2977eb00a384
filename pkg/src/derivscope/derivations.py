"""(alpha, beta, gamma)-derivations and the invariants built from them.

A linear map D on an n-dimensional algebra is treated as an unknown vector
of n*n rationals in column-major order: entry ``D[r][c]`` (the r-th
coordinate of ``D e_c``) sits at index ``c*n + r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .algebra import (
    Algebra,
    center,
    derived_algebra,
    is_lie,
    law_from_vector,
    product,
)
from .linalg import (
    Matrix,
    Subspace,
    as_rational,
    coordinate_complement,
    intersect,
    inverse,
    is_zero,
    nullspace,
    unit_vector,
)


def product_pairs(n: int):
    return ((i, j) for i in range(n) for j in range(n))


class PreconditionError(ValueError):
    """An operation was called outside the hypotheses it is stated under."""


@dataclass(frozen=True)
class DerivationParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for f in ("alpha", "beta", "gamma"):
            object.__setattr__(self, f, as_rational(getattr(self, f)))

    @classmethod
    def phi(cls, t) -> "DerivationParams":
        return cls(t, 1, 0)

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self):
        return "({},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class MapSpace:
    """A space of linear maps, kept as a canonical subspace of Q^(n*n).

    ``params`` is None for spaces that are not a single derivation space
    (e.g. the intersection giving Omega).
    """

    params: DerivationParams | None
    algebra_dim: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> list[Matrix]:
        return [Matrix.unvectorize(v, self.algebra_dim) for v in self.space.basis]

    def __contains__(self, d: Matrix) -> bool:
        return self.space.contains(d.vectorize())

    def __iter__(self) -> Iterator[Matrix]:
        return iter(self.basis)


def identity_defects(a: Algebra, p: DerivationParams, d: Matrix) -> list[tuple]:
    """Ordered basis pairs where ``alpha D mu - beta mu(D., .) - gamma mu(., D.)`` is nonzero.

    All ordered pairs are needed: swapping the arguments exchanges the roles
    of beta and gamma, so pairs i<j alone only decide the case beta = gamma.
    """
    n = a.dim
    cols = d.columns()
    bad = []
    for i, j in product_pairs(n):
        lhs = d.apply(a.basis_product(i, j))
        r1 = product(a, cols[i], unit_vector(n, j))
        r2 = product(a, unit_vector(n, i), cols[j])
        res = tuple(p.alpha * x - p.beta * y - p.gamma * z for x, y, z in zip(lhs, r1, r2))
        if not is_zero(res):
            bad.append(((i, j), res))
    return bad


def satisfies(a: Algebra, p: DerivationParams, d: Matrix) -> bool:
    return not identity_defects(a, p, d)


def constraint_matrix(a: Algebra, p: DerivationParams) -> Matrix:
    """One row per (ordered pair (i, j), output coordinate k); columns index D
    column-major. That is n**3 rows by n**2 columns."""
    n = a.dim
    tab = a.table()
    rows = []
    for i, j in product_pairs(n):
        cij = tab[i][j]
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            if p.alpha:
                for r in range(n):
                    if cij[r]:
                        row[r * n + k] += p.alpha * cij[r]
            if p.beta:
                for r in range(n):
                    c = tab[r][j][k]
                    if c:
                        row[i * n + r] -= p.beta * c
            if p.gamma:
                for r in range(n):
                    c = tab[i][r][k]
                    if c:
                        row[j * n + r] -= p.gamma * c
            rows.append(tuple(row))
    return Matrix(len(rows), n * n, tuple(rows))


@lru_cache(maxsize=4096)
def derivation_space(a: Algebra, p: DerivationParams) -> MapSpace:
    space = MapSpace(p, a.dim, nullspace(constraint_matrix(a, p)))
    for d in space.basis:
        if not satisfies(a, p, d):  # pragma: no cover - solver soundness guard
            raise AssertionError(f"solver returned a non-solution for {p}")
    return space


def phi(a: Algebra, t) -> int:
    return derivation_space(a, DerivationParams.phi(t)).dim


def omega_space(a: Algebra) -> MapSpace:
    """Maps with image in the center and the derived algebra in their kernel."""
    left = derivation_space(a, DerivationParams(0, 1, 0))
    right = derivation_space(a, DerivationParams(1, 0, 0))
    return MapSpace(None, a.dim, intersect(left.space, right.space))


def centroid(a: Algebra) -> MapSpace:
    return derivation_space(a, DerivationParams(1, 1, 0))


def _require_phi_derivation(a: Algebra, d: Matrix, t: Fraction):
    if t in (0, 1):
        raise PreconditionError(f"t must avoid 0 and 1, got {t}")
    if not is_lie(a):
        raise PreconditionError(f"{a.label()} is not a Lie algebra")
    if not d.is_square or d.rows != a.dim:
        raise PreconditionError("map size does not match the algebra")
    if not satisfies(a, DerivationParams.phi(t), d):
        raise PreconditionError(f"map is not a ({t},1,0)-derivation of {a.label()}")


def transport(a: Algebra, d: Matrix, t, s, complement: Subspace | None = None) -> Matrix:
    """Send a (t,1,0)-derivation to the (s,1,0)-derivation that agrees with it
    on the derived algebra and is scaled by s/t on a complement of it.

    The complement defaults to the coordinate complement of the derived algebra.
    """
    t, s = as_rational(t), as_rational(s)
    _require_phi_derivation(a, d, t)
    g2 = derived_algebra(a)
    if g2.dim == a.dim:
        raise PreconditionError(f"{a.label()} is perfect")
    comp = coordinate_complement(g2) if complement is None else complement
    if comp.dim + g2.dim != a.dim or intersect(comp, g2).dim != 0:
        raise PreconditionError("supplied subspace is not a complement of the derived algebra")
    ratio = s / t
    frame = list(comp.basis) + list(g2.basis)
    images = [tuple(ratio * x for x in d.apply(v)) for v in comp.basis]
    images += [d.apply(v) for v in g2.basis]
    # D_hat P = images  =>  D_hat = images P^-1
    P = Matrix.from_columns(frame, rows=a.dim)
    return Matrix.from_columns(images, rows=a.dim) @ inverse(P)


def restrict_to_derived(a: Algebra, d: Matrix, t) -> Matrix:
    """Matrix of d : A^(2) -> Z(A) cap A^(2) in the canonical bases of both.

    A zero-dimensional codomain gives a 0 x dim(A^(2)) matrix.
    """
    t = as_rational(t)
    _require_phi_derivation(a, d, t)
    dom = derived_algebra(a)
    cod = intersect(center(a), dom)
    cols = []
    for v in dom.basis:
        img = d.apply(v)
        try:
            cols.append(cod.coordinates(img))
        except ValueError:
            raise ValueError(f"image {img} of derived-algebra vector {v} leaves Z cap A^(2)") from None
    return Matrix(cod.dim, dom.dim, tuple(tuple(c[r] for c in cols) for r in range(cod.dim)))


def is_nilpotent(d: Matrix) -> int | None:
    """Smallest k <= n with d^k = 0, or None."""
    power = d
    for k in range(1, max(d.rows, 1) + 1):
        if power.is_zero():
            return k
        power = power @ d
    return None


def products_admitting(d: Matrix, p: DerivationParams) -> Subspace:
    """All anti-commutative laws (as structure-constant vectors) for which d
    satisfies the p-identity.

    Coordinates follow :func:`derivscope.algebra.structure_vector`: pairs i<j
    lexicographically, then output coordinate k.
    """
    n = d.rows
    pairs = list(combinations(range(n), 2))
    index = {pr: idx for idx, pr in enumerate(pairs)}
    nvars = len(pairs) * n

    def law_coeffs(i, j):
        # mu(e_i, e_j) as {var index: sign} per output coordinate l (var = c_ij^l)
        if i == j:
            return None, 0
        if i < j:
            return index[(i, j)], 1
        return index[(j, i)], -1

    rows = []
    for a_, b_ in product_pairs(n):
        for l in range(n):
            row = [Fraction(0)] * nvars
            pi, sgn = law_coeffs(a_, b_)
            # alpha (D mu(e_a, e_b))_l = alpha sum_k D[l][k] c_ab^k
            if pi is not None:
                for k in range(n):
                    if d[l, k]:
                        row[pi * n + k] += p.alpha * sgn * d[l, k]
            # beta mu(D e_a, e_b)_l = beta sum_r D[r][a] mu(e_r, e_b)_l
            for r in range(n):
                if d[r, a_]:
                    pi, sgn = law_coeffs(r, b_)
                    if pi is not None:
                        row[pi * n + l] -= p.beta * sgn * d[r, a_]
                if d[r, b_]:
                    pi, sgn = law_coeffs(a_, r)
                    if pi is not None:
                        row[pi * n + l] -= p.gamma * sgn * d[r, b_]
            rows.append(tuple(row))
    if not rows:
        return Subspace.full(nvars)
    return nullspace(Matrix(len(rows), nvars, tuple(rows)))


def admitting_laws(d: Matrix, p: DerivationParams) -> list[Algebra]:
    return [law_from_vector(v, d.rows) for v in products_admitting(d, p).basis]


def deformation_cocycle(a: Algebra, d: Matrix, t) -> Algebra:
    """The bilinear map ``lambda(X, Y) = mu(D X, Y)`` as an anti-commutative law."""
    t = as_rational(t)
    _require_phi_derivation(a, d, t)
    n = a.dim
    cols = d.columns()
    consts = {}
    for i, j in combinations(range(n), 2):
        ij = product(a, cols[i], unit_vector(n, j))
        ji = product(a, cols[j], unit_vector(n, i))
        if any(x + y for x, y in zip(ij, ji)):
            raise ValueError(f"lambda(e_{i}, e_{j}) != -lambda(e_{j}, e_{i}); map is not admissible")
        consts[(i, j)] = ij
    return Algebra(n, consts, f"lambda[{a.label()}]")

