"""Named algebras used as fixtures, each with invariants known in advance.

Indices are 0-based throughout: ``heisenberg3`` has ``mu(e0, e1) = e2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra as alg
from .algebra import Algebra
from .linalg import Matrix, as_rational, unit_vector, zero_vector

DEFAULT_T_SET = tuple(Fraction(x) for x in ("-2", "-1", "1/2", "2", "3"))


def _fmt(x) -> str:
    return str(as_rational(x))


def abelian(n: int) -> Algebra:
    return alg.abelian(n)


def aff() -> Algebra:
    return alg.one_dim_extension(Matrix.identity(1), name="aff")


def heisenberg3() -> Algebra:
    return Algebra.from_products(3, {(0, 1): {2: 1}}, name="h3")


def family_As(s) -> Algebra:
    """mu(e0,e2) = e0, mu(e0,e3) = s e1, mu(e1,e2) = s e1."""
    s = as_rational(s)
    return Algebra.from_products(4, {(0, 2): {0: 1}, (0, 3): {1: s}, (1, 2): {1: s}},
                                 name=f"As({_fmt(s)})")


def sl2() -> Algebra:
    # basis (h, e, f)
    a = Algebra.from_products(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, name="sl2")
    assert alg.is_lie(a) and alg.is_perfect(a)
    return a


def jordan_block(m: int) -> Matrix:
    """Nilpotent map e_i -> e_{i+1}, last basis vector -> 0."""
    return Matrix.from_columns(
        [unit_vector(m, i + 1) if i + 1 < m else zero_vector(m) for i in range(m)], rows=m)


def standard_filiform(n: int) -> Algebra:
    if n < 4:
        raise ValueError(f"standard filiform algebras need n >= 4, got {n}")
    return alg.one_dim_extension(jordan_block(n - 1), name=f"filiform({n})")


def with_abelian_factor(a: Algebra, m: int) -> Algebra:
    if m == 0:
        return a
    return alg.direct_product(a, alg.abelian(m), name=f"{a.label()}xK^{m}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    algebra: Algebra
    # invariant name -> exact value; "phi[t]" keys are (t,1,0)-space dimensions
    expected: dict = field(default_factory=dict)


def _phi_keys(values: dict) -> dict:
    return {f"phi[{_fmt(t)}]": v for t, v in values.items()}


def _const_phi(v: int) -> dict:
    return _phi_keys({t: v for t in DEFAULT_T_SET})


def default_catalog() -> list[CatalogEntry]:
    """Fixtures with their invariants; every value is re-derived by the verifier."""
    out = []

    for n in (1, 3):
        out.append(CatalogEntry(f"K^{n}", (n,), abelian(n),
                                {"is_lie": True, "derived": 0, "center": n, "omega": n * n,
                                 **_const_phi(n * n)}))

    out.append(CatalogEntry("aff", (), aff(),
                            {"is_lie": True, "derived": 1, "center": 0, "centroid": 1,
                             "phi[-1]": 0}))
    for m in (1, 2):
        g = with_abelian_factor(aff(), m)
        out.append(CatalogEntry(g.name, (m,), g,
                                {"is_lie": True, "omega": (m + 1) * m,
                                 **_const_phi((m + 1) * m)}))

    for m in (0, 1, 2):
        g = with_abelian_factor(heisenberg3(), m)
        omega = (m + 2) * (m + 1)
        out.append(CatalogEntry(g.name, (m,), g,
                                {"is_lie": True, "derived": 1, "center": m + 1,
                                 "omega": omega, **_const_phi(omega + 1)}))

    for s in ("0", "2", "3", "-1", "1/2"):
        s = Fraction(s)
        a = family_As(s)
        if s == 0:
            exp = _const_phi(6)
        else:
            exp = _phi_keys({t: (1 if t == s else 0) for t in DEFAULT_T_SET})
            exp["derived"] = 2
        exp["is_lie"] = s in (0, 1)
        out.append(CatalogEntry(a.name, (s,), a, exp))

    for m in (1, 2):
        g = with_abelian_factor(family_As(2), m)
        out.append(CatalogEntry(g.name, (Fraction(2), m), g,
                                {"is_lie": False, "omega": (m + 2) * m,
                                 "phi[2]": 1 + (m + 2) * m, "phi[3]": (m + 2) * m}))

    out.append(CatalogEntry("sl2", (), sl2(),
                            {"is_lie": True, "is_perfect": True, "center": 0,
                             "centroid": 1, **_const_phi(0)}))
    sl2sq = alg.direct_product(sl2(), sl2(), name="sl2xsl2")
    out.append(CatalogEntry("sl2xsl2", (), sl2sq,
                            {"is_lie": True, "is_perfect": True, **_const_phi(0)}))
    g = with_abelian_factor(sl2(), 1)
    out.append(CatalogEntry(g.name, (1,), g,
                            {"is_lie": True, "is_perfect": False, **_const_phi(1)}))

    for n in (4, 5, 6):
        g = standard_filiform(n)
        out.append(CatalogEntry(g.name, (n,), g,
                                {"is_lie": True, "derived": n - 2, "center": 1, "omega": 2,
                                 "centroid": 3, **_const_phi(2)}))
    return out


# name -> (builder, parameter parsers) for the command line
BUILDERS = {
    "abelian": (abelian, (int,)),
    "aff": (aff, ()),
    "h3": (heisenberg3, ()),
    "As": (family_As, (Fraction,)),
    "sl2": (sl2, ()),
    "filiform": (standard_filiform, (int,)),
}


def build(name: str, *params: str, abelian_factor: int = 0) -> Algebra:
    if name not in BUILDERS:
        raise KeyError(f"unknown catalog algebra {name!r}; known: {', '.join(BUILDERS)}")
    fn, parsers = BUILDERS[name]
    if len(params) != len(parsers):
        raise ValueError(f"{name} takes {len(parsers)} parameter(s), got {len(params)}")
    a = fn(*(p(x) for p, x in zip(parsers, params)))
    return with_abelian_factor(a, abelian_factor)
