"""Executable checks of the structural results about (t,1,0)-derivations.

Every ``check_*`` function returns a :class:`CheckReport`. A check called
outside its hypotheses raises :class:`PreconditionError`; :func:`run_all`
turns those into ``not_applicable`` reports so that a vacuous pass can never
hide a misconfigured run.

Statements quantified over all t outside {0, 1} are only ever evaluated on a
finite sample of t. Reports say so in their ``note``; the step from the
sample to every t is the transport isomorphism, which is itself checked by
:func:`check_transport_bijection`.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import algebra as alg
from . import catalog as cat
from .algebra import Algebra
from .derivations import (
    DerivationParams,
    MapSpace,
    PreconditionError,
    centroid,
    deformation_cocycle,
    derivation_space,
    identity_defects,
    is_nilpotent,
    omega_space,
    phi,
    products_admitting,
    restrict_to_derived,
    satisfies,
    transport,
)
from .linalg import (
    Matrix,
    Subspace,
    as_rational,
    coordinate_complement,
    intersect,
    is_zero,
    rank,
    span,
    unit_vector,
    zero_vector,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

SAMPLED = "sampled over the listed t; all t != 0,1 follow from the transport isomorphism"


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    subject: str
    parameters: tuple
    status: str
    witness: str | None = None
    note: str = ""
    values: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def sort_key(self):
        return (self.check_name, self.subject, tuple(str(p) for p in self.parameters))


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def _report(name, subject, params, failures: list[str], note="", values=None) -> CheckReport:
    params = tuple(params)
    if failures:
        return CheckReport(name, subject, params, FAIL, "; ".join(failures), note, values or {})
    return CheckReport(name, subject, params, PASS, None, note, values or {})


def _require_t(t):
    if t in (0, 1):
        raise PreconditionError(f"t = {t} is excluded (need t != 0, 1)")


def _require_lie(a: Algebra):
    if not alg.is_lie(a):
        (i, j, k), J = alg.jacobi_defects(a)[0]
        raise PreconditionError(f"{a.label()} is not Lie: jacobiator(e{i},e{j},e{k}) = {_fmt(J)}")


def _require_non_perfect(a: Algebra):
    if alg.is_perfect(a):
        raise PreconditionError(f"{a.label()} is perfect")


def _contained(small: MapSpace, big: MapSpace) -> list[int]:
    return [k for k, v in enumerate(small.space.basis) if not big.space.contains(v)]


# ---------------------------------------------------------------------------
# single-algebra checks
# ---------------------------------------------------------------------------

def check_defining_identity(a: Algebra, p: DerivationParams, space: MapSpace) -> CheckReport:
    failures = []
    for k, d in enumerate(space.basis):
        for (i, j), res in identity_defects(a, p, d)[:1]:
            failures.append(f"basis[{k}] on (e{i},e{j}): residual {_fmt(res)}")
    return _report("defining_identity", a.label(), p.as_tuple(), failures,
                   values={"dim": space.dim})


def check_triple_identity(a: Algebra, t) -> CheckReport:
    """D mu(X, mu(Y, Z)) = 0 for (t,1,0)-derivations D of a Lie algebra."""
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    n = a.dim
    space = derivation_space(a, DerivationParams.phi(t))
    tab = a.table()
    triples = {}
    for i in range(n):
        for j, k in combinations(range(n), 2):
            v = alg.product(a, unit_vector(n, i), tab[j][k])
            if not is_zero(v):
                triples[(i, j, k)] = v
    failures = []
    for idx, d in enumerate(space.basis):
        for (i, j, k), v in triples.items():
            img = d.apply(v)
            if not is_zero(img):
                failures.append(f"basis[{idx}] on mu(e{i},mu(e{j},e{k})): {_fmt(img)}")
                break
    return _report("triple_identity", a.label(), (t,), failures,
                   values={"phi": space.dim, "nonzero_triples": len(triples)})


def check_perfect_trivial(a: Algebra, t) -> CheckReport:
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    if not alg.is_perfect(a):
        raise PreconditionError(f"{a.label()} is not perfect")
    space = derivation_space(a, DerivationParams.phi(t))
    failures = []
    if space.dim:
        failures.append(f"phi = {space.dim}, first basis map columns {_fmt(space.basis[0].columns())}")
    return _report("perfect_trivial", a.label(), (t,), failures, values={"phi": space.dim})


def check_constancy(a: Algebra, t_set: Sequence) -> CheckReport:
    ts = [as_rational(t) for t in t_set]
    for t in ts:
        _require_t(t)
    _require_lie(a)
    vals = {t: phi(a, t) for t in ts}
    failures = []
    if len(set(vals.values())) > 1:
        failures.append("phi differs: " + ", ".join(f"phi({_fmt(t)})={v}" for t, v in vals.items()))
    return _report("constancy", a.label(), ts, failures, note=SAMPLED,
                   values={"phi": {str(t): v for t, v in vals.items()}})


def _bound_data(a: Algebra, t) -> dict:
    g2 = alg.derived_algebra(a)
    z = alg.center(a)
    zg2 = intersect(z, g2)
    lower2 = alg.lower_central_second(a)
    om = omega_space(a).dim
    ph = phi(a, t)
    refined = 0 < lower2.dim < g2.dim
    return {
        "phi": ph,
        "omega": om,
        "derived": g2.dim,
        "center_cap_derived": zg2.dim,
        "lower_central_2": lower2.dim,
        "upper": om + g2.dim * zg2.dim,
        "refined_applies": refined,
        "refined_upper": om + (g2.dim - lower2.dim) * zg2.dim if refined else None,
    }


def check_bounds(a: Algebra, t) -> CheckReport:
    """dim Omega <= phi <= dim Omega + dim L(A^(2); Z cap A^(2)), plus the
    sharper quotient bound when mu(A^(2), A) is nontrivial and proper."""
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    _require_non_perfect(a)
    v = _bound_data(a, t)
    failures = []
    if v["phi"] < v["omega"]:
        failures.append(f"phi={v['phi']} < dim Omega={v['omega']}")
    if v["phi"] > v["upper"]:
        failures.append(f"phi={v['phi']} > upper bound {v['upper']}")
    if v["refined_applies"] and v["phi"] > v["refined_upper"]:
        failures.append(f"phi={v['phi']} > refined upper bound {v['refined_upper']}")
    v["lower_attained"] = v["phi"] == v["omega"]
    v["upper_attained"] = v["phi"] == v["upper"]
    note = (f"{v['omega']} <= {v['phi']} <= {v['upper']}"
            + (f"; refined <= {v['refined_upper']}" if v["refined_applies"] else ""))
    return _report("bounds", a.label(), (t,), failures, note=note, values=v)


def check_centroid_embedding(a: Algebra, t) -> CheckReport:
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    _require_non_perfect(a)
    space = derivation_space(a, DerivationParams.phi(t))
    cent = centroid(a)
    images = [transport(a, d, t, 1) for d in space.basis]
    failures = []
    for k, img in enumerate(images):
        if img not in cent:
            failures.append(f"transport of basis[{k}] to s=1 is not in the centroid")
    r = rank(Matrix(len(images), a.dim ** 2, tuple(m.vectorize() for m in images))) if images else 0
    if r != space.dim:
        failures.append(f"transported maps have rank {r}, expected {space.dim}")
    if space.dim > cent.dim:
        failures.append(f"phi={space.dim} exceeds centroid dimension {cent.dim}")
    g2 = alg.derived_algebra(a)
    lower2 = alg.lower_central_second(a)
    refined = 0 < lower2.dim < g2.dim
    if refined:
        ident = Matrix.identity(a.dim).vectorize()
        with_id = [m.vectorize() for m in images] + [ident]
        if rank(Matrix(len(with_id), a.dim ** 2, tuple(with_id))) != space.dim + 1:
            failures.append("identity lies in the span of the transported maps")
        if space.dim + 1 > cent.dim:
            failures.append(f"phi + 1 = {space.dim + 1} exceeds centroid dimension {cent.dim}")
    return _report("centroid_embedding", a.label(), (t,), failures,
                   values={"phi": space.dim, "centroid": cent.dim, "refined_applies": refined,
                           "sharp": refined and space.dim + 1 == cent.dim})


def check_omega(a: Algebra, t_set: Sequence = cat.DEFAULT_T_SET) -> CheckReport:
    """Omega has dimension (n - dim A^(2)) dim Z and lies in every (t,1,0)-space."""
    om = omega_space(a)
    n = a.dim
    g2 = alg.derived_algebra(a)
    z = alg.center(a)
    expected = (n - g2.dim) * z.dim
    failures = []
    if om.dim != expected:
        failures.append(f"dim Omega = {om.dim}, expected (n - {g2.dim}) * {z.dim} = {expected}")
    for k, d in enumerate(om.basis):
        if not all(z.contains(c) for c in d.columns()):
            failures.append(f"basis[{k}] has image outside the center")
        if not all(is_zero(d.apply(v)) for v in g2.basis):
            failures.append(f"basis[{k}] does not kill the derived algebra")
    for t in t_set:
        bad = _contained(om, derivation_space(a, DerivationParams.phi(t)))
        if bad:
            failures.append(f"Omega basis[{bad[0]}] is not a ({_fmt(t)},1,0)-derivation")
    return _report("omega", a.label(), tuple(as_rational(t) for t in t_set), failures,
                   values={"omega": om.dim})


def check_containment_chain(a: Algebra, t) -> CheckReport:
    """Omega <= D(t,1,0) <= D(0,1,-1)."""
    t = as_rational(t)
    om = omega_space(a)
    mid = derivation_space(a, DerivationParams.phi(t))
    top = derivation_space(a, DerivationParams(0, 1, -1))
    failures = []
    bad = _contained(om, mid)
    if bad:
        failures.append(f"Omega basis[{bad[0]}] not in D({_fmt(t)},1,0)")
    bad = _contained(mid, top)
    if bad:
        failures.append(f"D({_fmt(t)},1,0) basis[{bad[0]}] not in D(0,1,-1)")
    return _report("containment_chain", a.label(), (t,), failures,
                   values={"omega": om.dim, "phi": mid.dim, "d01m1": top.dim})


def check_centralizer_preservation(a: Algebra, t) -> CheckReport:
    t = as_rational(t)
    if t == 0:
        raise PreconditionError("t = 0 is excluded (need t != 0)")
    n = a.dim
    subspaces = {"Z": alg.center(a)}
    for i in range(n):
        subspaces[f"C(e{i})"] = alg.centralizer(a, [unit_vector(n, i)])
    failures = []
    for k, d in enumerate(derivation_space(a, DerivationParams.phi(t)).basis):
        for label, sub in subspaces.items():
            for v in sub.basis:
                if not sub.contains(d.apply(v)):
                    failures.append(f"basis[{k}] maps {_fmt(v)} out of {label}")
                    break
    return _report("centralizer_preservation", a.label(), (t,), failures)


def check_derived_to_center(a: Algebra, t) -> CheckReport:
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    failures = []
    for k, d in enumerate(derivation_space(a, DerivationParams.phi(t)).basis):
        try:
            restrict_to_derived(a, d, t)
        except PreconditionError:
            raise
        except ValueError as exc:
            failures.append(f"basis[{k}]: {exc}")
    return _report("derived_to_center", a.label(), (t,), failures)


def check_transport_bijection(a: Algebra, t, s) -> CheckReport:
    """D(t,1,0) and D(s,1,0) have equal dimension and transport is a two-sided inverse pair."""
    t, s = as_rational(t), as_rational(s)
    _require_t(t)
    _require_t(s)
    _require_lie(a)
    _require_non_perfect(a)
    src = derivation_space(a, DerivationParams.phi(t))
    dst = derivation_space(a, DerivationParams.phi(s))
    failures = []
    if src.dim != dst.dim:
        failures.append(f"dim D({_fmt(t)},1,0) = {src.dim} but dim D({_fmt(s)},1,0) = {dst.dim}")
    images = []
    for k, d in enumerate(src.basis):
        img = transport(a, d, t, s)
        images.append(img.vectorize())
        if img not in dst:
            failures.append(f"image of basis[{k}] is not an ({_fmt(s)},1,0)-derivation")
            continue
        if transport(a, img, s, t) != d:
            failures.append(f"round trip of basis[{k}] does not return it")
    if images and span(images, a.dim ** 2) != dst.space:
        failures.append("transported basis does not span the target space")
    return _report("transport_bijection", a.label(), (t, s), failures,
                   values={"dim": src.dim})


def check_deformation(a: Algebra, t, s_samples: Sequence = (1, 2, 3)) -> CheckReport:
    """lambda(X, Y) = mu(D X, Y) is antisymmetric, Lie, and mu + s lambda stays Lie."""
    t = as_rational(t)
    _require_t(t)
    _require_lie(a)
    ss = [as_rational(s) for s in s_samples]
    failures = []
    space = derivation_space(a, DerivationParams.phi(t))
    for k, d in enumerate(space.basis):
        try:
            lam = deformation_cocycle(a, d, t)
        except PreconditionError:
            raise
        except ValueError as exc:
            failures.append(f"basis[{k}]: {exc}")
            continue
        bad = alg.jacobi_defects(lam)
        if bad:
            (i, j, l), J = bad[0]
            failures.append(f"basis[{k}]: lambda fails Jacobi on (e{i},e{j},e{l}): {_fmt(J)}")
        for s in ss:
            bad = alg.jacobi_defects(alg.deformed_product(a, lam, s))
            if bad:
                (i, j, l), J = bad[0]
                failures.append(f"basis[{k}], s={_fmt(s)}: jacobiator(e{i},e{j},e{l}) = {_fmt(J)}")
    nonzero = {s for s in ss if s != 0}
    if len(nonzero) >= 2:
        note = ("the Jacobi defect of mu + s*lambda is a polynomial of degree <= 2 in s, "
                "zero at s=0 since mu is Lie; vanishing at "
                f"{len(nonzero)} distinct nonzero s therefore certifies every s")
    else:
        note = "fewer than two nonzero s sampled: result holds only at the sampled s"
    return _report("deformation", a.label(), (t, *ss), failures, note=note,
                   values={"maps": space.dim, "certified_all_s": len(nonzero) >= 2})


def check_isomorphism_invariance(a: Algebra, g: Matrix, p: DerivationParams) -> CheckReport:
    if not g.is_square or g.rows != a.dim or rank(g) != g.rows:
        raise PreconditionError("change of basis matrix must be invertible")
    b = alg.change_of_basis(a, g)
    d1 = derivation_space(a, p).dim
    d2 = derivation_space(b, p).dim
    failures = []
    if d1 != d2:
        failures.append(f"dim changes from {d1} to {d2} under g = {_fmt(g.entries)}")
    return _report("isomorphism_invariance", a.label(), p.as_tuple(), failures,
                   values={"dim": d1})


def check_nilpotent_derivations(a: Algebra, t) -> CheckReport:
    """On a centerless algebra every (t,1,0)-derivation is nilpotent (t not a root of unity).

    This is an instance check only; the general claim is stated over an
    algebraically closed field.
    """
    t = as_rational(t)
    if t in (0, 1, -1):
        raise PreconditionError(f"t = {t} is 0, 1 or a root of unity")
    if alg.center(a).dim:
        raise PreconditionError(f"{a.label()} has a nonzero center")
    failures = []
    for k, d in enumerate(derivation_space(a, DerivationParams.phi(t)).basis):
        if is_nilpotent(d) is None:
            failures.append(f"basis[{k}] = {_fmt(d.entries)} is not nilpotent")
    return _report("nilpotent_derivations", a.label(), (t,), failures,
                   note="verified on this instance only")


def check_expected(entry: cat.CatalogEntry) -> CheckReport:
    """Recompute every invariant the catalog entry records."""
    a = entry.algebra
    compute: dict[str, Callable] = {
        "is_lie": lambda: alg.is_lie(a),
        "is_perfect": lambda: alg.is_perfect(a),
        "derived": lambda: alg.derived_algebra(a).dim,
        "center": lambda: alg.center(a).dim,
        "omega": lambda: omega_space(a).dim,
        "centroid": lambda: centroid(a).dim,
    }
    failures = []
    got = {}
    for key, want in entry.expected.items():
        if key.startswith("phi[") and key.endswith("]"):
            value = phi(a, Fraction(key[4:-1]))
        elif key in compute:
            value = compute[key]()
        else:
            failures.append(f"unknown invariant {key!r}")
            continue
        got[key] = value
        if value != want:
            failures.append(f"{key}: expected {want}, computed {value}")
    return _report("catalog_expected", entry.name, entry.params, failures, values=got)


# ---------------------------------------------------------------------------
# statements about specific families
# ---------------------------------------------------------------------------

def check_direct_sum_lemma(b: Algebra, m: int, t) -> CheckReport:
    """dim D(t,1,0)(B x K^m) = dim D(t,1,0)(B) + (n - dim A^(2)) dim Z(A)."""
    t = as_rational(t)
    if t == 0:
        raise PreconditionError("t = 0 is excluded (need t != 0)")
    a = cat.with_abelian_factor(b, m)
    z = alg.center(a)
    block = Subspace(a.dim, tuple(unit_vector(a.dim, b.dim + i) for i in range(m)))
    if z != block:
        raise PreconditionError(f"center of {a.label()} is not the abelian factor "
                                f"(dim Z = {z.dim}, factor dim {m})")
    lhs = phi(a, t)
    quotient = a.dim - alg.derived_algebra(a).dim
    rhs = phi(b, t) + quotient * z.dim
    failures = []
    if lhs != rhs:
        failures.append(f"dim D = {lhs} but {phi(b, t)} + {quotient}*{z.dim} = {rhs}")
    return _report("direct_sum_lemma", a.label(), (t, m), failures,
                   values={"lhs": lhs, "rhs": rhs})


def check_proposition_table(t, s_values: Sequence) -> CheckReport:
    """phi_t(As) = 6 at s=0, 1 at s=t, 0 otherwise."""
    t = as_rational(t)
    _require_t(t)
    cases = {Fraction(0): 6, t: 1}
    for s in s_values:
        s = as_rational(s)
        if s not in cases:
            cases[s] = 0
    failures = []
    got = {}
    for s, want in cases.items():
        v = phi(cat.family_As(s), t)
        got[str(s)] = v
        if v != want:
            failures.append(f"phi({_fmt(t)}) of As({_fmt(s)}) = {v}, expected {want}")
    return _report("proposition_table", "As", (t, *cases), failures, values=got)


def check_infinite_family(t, m_values: Sequence = (1, 2, 3), s=None) -> CheckReport:
    """phi_t(As x K^m) is 1 + (m+2)m at s=t and (m+2)m at a nonzero s != t."""
    t = as_rational(t)
    _require_t(t)
    s = t + 1 if s is None else as_rational(s)
    if s in (0, t):
        raise PreconditionError("comparison parameter must differ from 0 and t")
    failures = []
    got = {}
    for m in m_values:
        base = (m + 2) * m
        for par, want in ((t, 1 + base), (s, base)):
            v = phi(cat.with_abelian_factor(cat.family_As(par), m), t)
            got[f"As({par})xK^{m}"] = v
            if v != want:
                failures.append(f"As({_fmt(par)}) x K^{m}: phi({_fmt(t)}) = {v}, expected {want}")
    return _report("infinite_family", "AsxK^m", (t, s, *m_values), failures, values=got)


def check_three_dim(t_set: Sequence = cat.DEFAULT_T_SET) -> CheckReport:
    """3-dimensional values: h3 gives 3, aff x K gives 2, the centerless sl2 gives 0."""
    ts = [as_rational(t) for t in t_set]
    for t in ts:
        _require_t(t)
    cases = [(cat.heisenberg3(), 3), (cat.with_abelian_factor(cat.aff(), 1), 2), (cat.sl2(), 0)]
    failures = []
    for a, want in cases:
        for t in ts:
            v = phi(a, t)
            if v != want:
                failures.append(f"{a.label()}: phi({_fmt(t)}) = {v}, expected {want}")
    return _report("three_dim_values", "dim3", ts, failures, note=SAMPLED)


def collapse_values(n: int) -> dict:
    g = cat.with_abelian_factor(cat.aff(), n)
    return {t: phi(g, t) for t in (Fraction(-1), Fraction(0), Fraction(1))}


def check_collapse(n_values: Sequence = (1, 2)) -> CheckReport:
    """phi at t = -1, 0, 1 are three different functions, separated on aff x K^n.

    The report records, per n, which pairs that single algebra separates;
    at n = 1 the values at t = 0 and t = 1 coincide, so only the family as a
    whole separates all three.
    """
    table = {n: collapse_values(n) for n in n_values}
    pairs = [(Fraction(-1), Fraction(0)), (Fraction(-1), Fraction(1)), (Fraction(0), Fraction(1))]
    failures = []
    per_n = {}
    for a, b in pairs:
        seps = [n for n, v in table.items() if v[a] != v[b]]
        per_n[f"{a},{b}"] = seps
        if not seps:
            failures.append(f"phi({a}) and phi({b}) agree on every aff x K^n sampled")
    values = {"values": {n: {str(t): v for t, v in vals.items()} for n, vals in table.items()},
              "separated_by": per_n,
              "pairwise_distinct_per_n": {n: len(set(v.values())) == 3 for n, v in table.items()}}
    note = "; ".join(f"n={n}: " + ", ".join(f"phi({t})={v}" for t, v in vals.items())
                     for n, vals in table.items())
    return _report("collapse", "affxK^n", tuple(n_values), failures, note=note, values=values)


def check_filiform(n: int, t_set: Sequence = (2, -1)) -> CheckReport:
    """Standard filiform: centroid = span{Id} + Omega and D(t,1,0) = Omega.

    The second identity is checked for the (t,1,0) family.
    """
    g = cat.standard_filiform(n)
    om = omega_space(g)
    cent = centroid(g)
    failures = []
    expected_cent = span(list(om.space.basis) + [Matrix.identity(n).vectorize()], n * n)
    if cent.space != expected_cent:
        failures.append(f"centroid (dim {cent.dim}) != span(Id) + Omega (dim {expected_cent.dim})")
    for t in t_set:
        t = as_rational(t)
        _require_t(t)
        sp = derivation_space(g, DerivationParams.phi(t))
        if sp.space != om.space:
            failures.append(f"D({_fmt(t)},1,0) (dim {sp.dim}) != Omega (dim {om.dim})")
    return _report("filiform", g.label(), (n, *t_set), failures,
                   values={"omega": om.dim, "centroid": cent.dim})


def shift_map_D() -> Matrix:
    """The 4x4 map e0 -> e1, e2 -> e3, e1, e3 -> 0."""
    return Matrix.from_columns([unit_vector(4, 1), zero_vector(4), unit_vector(4, 3), zero_vector(4)])


def admitting_family_generators(t) -> list:
    """Structure vectors of the family spanned by parameters a, b, c, d:
    mu(e0,e2) = a e0 + c e1 + b e2 + d e3, mu(e0,e3) = mu(e1,e2) = t(a e1 + b e3)."""
    t = as_rational(t)
    gens = []
    for coeff13, extra in (((1, 0, 0, 0), (0, t, 0, 0)),   # a
                           ((0, 0, 1, 0), (0, 0, 0, t)),   # b
                           ((0, 1, 0, 0), (0, 0, 0, 0)),   # c
                           ((0, 0, 0, 1), (0, 0, 0, 0))):  # d
        law = Algebra(4, {(0, 2): coeff13, (0, 3): extra, (1, 2): extra})
        gens.append(alg.structure_vector(law))
    return gens


def check_products_admitting(t) -> CheckReport:
    t = as_rational(t)
    _require_t(t)
    sol = products_admitting(shift_map_D(), DerivationParams.phi(t))
    fam = span(admitting_family_generators(t), sol.ambient_dim)
    failures = []
    if sol.dim != 4:
        failures.append(f"solution space has dimension {sol.dim}, expected 4")
    if sol != fam:
        failures.append("solution space differs from the four-parameter family")
    for k, v in enumerate(sol.basis):
        law = alg.law_from_vector(v, 4)
        m13 = law.basis_product(0, 2)
        want = tuple(Fraction(0) if i in (0, 2) else t * m13[i - 1] for i in range(4))
        if law.basis_product(0, 3) != want or law.basis_product(1, 2) != want:
            failures.append(f"basis[{k}] breaks mu(e0,e3) = mu(e1,e2) = t(a e1 + b e3)")
        for pair in ((0, 1), (1, 3), (2, 3)):
            if not is_zero(law.basis_product(*pair)):
                failures.append(f"basis[{k}] has nonzero mu{pair}")
    return _report("products_admitting", "D:e0->e1,e2->e3", (t,), failures,
                   values={"dim": sol.dim})


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyConfig:
    t_set: tuple = cat.DEFAULT_T_SET
    s_samples: tuple = (Fraction(1), Fraction(2), Fraction(3))
    m_values: tuple = (1, 2, 3)
    filiform_dims: tuple = (4, 5, 6)
    invariance_trials: int = 2
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "t_set", tuple(as_rational(t) for t in self.t_set))
        object.__setattr__(self, "s_samples", tuple(as_rational(s) for s in self.s_samples))


def random_invertible(n: int, rng: random.Random, entries=(-2, -1, 0, 1, 2)) -> Matrix:
    while True:
        g = Matrix.from_rows([[rng.choice(entries) for _ in range(n)] for _ in range(n)], cols=n) \
            if n else Matrix.identity(0)
        if rank(g) == n:
            return g


def _guard(fn, name, subject, params) -> Callable[[], CheckReport]:
    def run():
        try:
            return fn()
        except PreconditionError as exc:
            return CheckReport(name, subject, tuple(params), NOT_APPLICABLE, str(exc))
    return run


def algebra_tasks(a: Algebra, config: VerifyConfig) -> list:
    """Every single-algebra check, as deferred calls."""
    subj = a.label()
    ts = config.t_set
    tasks = []

    def add(name, params, fn):
        tasks.append(_guard(fn, name, subj, params))

    for p in [DerivationParams.phi(t) for t in ts] + [DerivationParams(1, 1, 0),
                                                        DerivationParams(0, 1, -1)]:
        add("defining_identity", p.as_tuple(),
            lambda p=p: check_defining_identity(a, p, derivation_space(a, p)))
    add("omega", ts, lambda: check_omega(a, [t for t in ts if t != 0]))
    add("constancy", ts, lambda: check_constancy(a, ts))
    for t in ts:
        add("containment_chain", (t,), lambda t=t: check_containment_chain(a, t))
        add("centralizer_preservation", (t,), lambda t=t: check_centralizer_preservation(a, t))
        add("triple_identity", (t,), lambda t=t: check_triple_identity(a, t))
        add("derived_to_center", (t,), lambda t=t: check_derived_to_center(a, t))
        add("perfect_trivial", (t,), lambda t=t: check_perfect_trivial(a, t))
        add("bounds", (t,), lambda t=t: check_bounds(a, t))
        add("centroid_embedding", (t,), lambda t=t: check_centroid_embedding(a, t))
        add("deformation", (t,), lambda t=t: check_deformation(a, t, config.s_samples))
        add("nilpotent_derivations", (t,), lambda t=t: check_nilpotent_derivations(a, t))
    for t, s in zip(ts, ts[1:] + ts[:1]):
        add("transport_bijection", (t, s), lambda t=t, s=s: check_transport_bijection(a, t, s))
    rng = random.Random(f"{config.seed}:{subj}")
    for _ in range(config.invariance_trials):
        g = random_invertible(a.dim, rng)
        p = DerivationParams.phi(ts[0]) if ts else DerivationParams(1, 1, 0)
        add("isomorphism_invariance", p.as_tuple(),
            lambda g=g, p=p: check_isomorphism_invariance(a, g, p))
    return tasks


def family_tasks(config: VerifyConfig) -> list:
    ts = config.t_set
    tasks = []

    def add(name, subject, params, fn):
        tasks.append(_guard(fn, name, subject, params))

    for t in ts:
        s_values = (t + 1, -t, Fraction(1, 3))
        add("proposition_table", "As", (t,), lambda t=t, sv=s_values: check_proposition_table(t, sv))
        add("infinite_family", "AsxK^m", (t,),
            lambda t=t: check_infinite_family(t, config.m_values))
        add("products_admitting", "D:e0->e1,e2->e3", (t,), lambda t=t: check_products_admitting(t))
        for m in config.m_values:
            for par in (t, t + 1):
                b = cat.family_As(par)
                add("direct_sum_lemma", f"{b.label()}xK^{m}", (t, m),
                    lambda b=b, m=m, t=t: check_direct_sum_lemma(b, m, t))
    add("three_dim_values", "dim3", ts, lambda: check_three_dim(ts))
    add("collapse", "affxK^n", (1, 2), lambda: check_collapse((1, 2)))
    phi_ts = [t for t in ts if t not in (0, 1)][:2]
    for n in config.filiform_dims:
        add("filiform", f"filiform({n})", (n,), lambda n=n: check_filiform(n, phi_ts))
    return tasks


def _workers() -> int:
    try:
        return max(0, int(os.environ.get("DERIVSCOPE_THREADS", "0")))
    except ValueError:
        return 0


def execute(tasks: Iterable[Callable[[], CheckReport]], workers: int | None = None) -> list[CheckReport]:
    tasks = list(tasks)
    workers = _workers() if workers is None else workers
    if workers:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda f: f(), tasks))
    else:
        reports = [f() for f in tasks]
    return sorted(reports, key=lambda r: r.sort_key)


def run_all(config: VerifyConfig = VerifyConfig(), entries: Sequence[cat.CatalogEntry] | None = None,
            include_families: bool = True, workers: int | None = None) -> list[CheckReport]:
    """Run every applicable check over the catalog (or ``entries``) crossed with ``config``."""
    entries = cat.default_catalog() if entries is None else list(entries)
    tasks = []
    for e in entries:
        tasks.append(_guard(lambda e=e: check_expected(e), "catalog_expected", e.name, e.params))
        tasks.extend(algebra_tasks(e.algebra.renamed(e.name), config))
    if include_families:
        tasks.extend(family_tasks(config))
    return execute(tasks, workers)


def overall_pass(reports: Iterable[CheckReport]) -> bool:
    return not any(r.status == FAIL for r in reports)
