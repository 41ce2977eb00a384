import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import laws
from derivscope import algebra as alg
from derivscope import catalog as cat
from derivscope.derivations import (
    DerivationParams,
    PreconditionError,
    centroid,
    constraint_matrix,
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
from derivscope.linalg import Matrix, Subspace, coordinate_complement, span, unit_vector
from oracles import derivation_dim

F = Fraction
P = DerivationParams
T_SAMPLE = [F(-2), F(-1), F(1, 2), F(2), F(3)]
CATALOG = cat.default_catalog()
LIE = [e.algebra for e in CATALOG if e.expected.get("is_lie")]
NON_PERFECT_LIE = [a for a in LIE if not alg.is_perfect(a)]
ids = lambda a: a.label()  # noqa: E731


def shift_D():
    return Matrix.from_columns([unit_vector(4, 1), (0,) * 4, unit_vector(4, 3), (0,) * 4])


# --- constraint system ----------------------------------------------------

def test_constraint_matrix_shape_and_trivial_cases():
    h = cat.heisenberg3()
    m = constraint_matrix(h, P(2, 1, 0))
    assert (m.rows, m.cols) == (27, 9)
    assert constraint_matrix(alg.abelian(3), P(2, 1, 0)).is_zero()
    assert constraint_matrix(h, P(0, 0, 0)).is_zero()


def test_unordered_pairs_are_not_enough():
    # swapping arguments swaps beta and gamma: diag(0,1,0) on h3 with (1,1,0)
    # holds on (e0, e1) but D mu(e1, e0) = 0 != mu(D e1, e0) = -e2
    h = cat.heisenberg3()
    d = Matrix.diagonal([0, 1, 0])
    assert [pair for pair, _ in identity_defects(h, P(1, 1, 0), d)] == [(1, 0)]
    d = Matrix.diagonal([1, 1, 2])
    assert satisfies(h, P(1, 1, 1), d)


@pytest.mark.parametrize("t", T_SAMPLE)
def test_heisenberg_phi_is_three(t):
    assert derivation_space(cat.heisenberg3(), P.phi(t)).dim == 3


@pytest.mark.parametrize("p", [P(2, 1, 0), P(1, 1, 0), P(0, 1, -1), P(0, 0, 0), P(5, -3, 7)])
def test_abelian_admits_every_map(p):
    assert derivation_space(alg.abelian(3), p).dim == 9


def test_aff_centroid_and_minus_one():
    sp = derivation_space(cat.aff(), P(1, 1, 0))
    assert sp.dim == 1 and Matrix.identity(2) in sp
    assert derivation_space(cat.aff(), P(-1, 1, 0)).dim == 0


def test_phi_proposition_examples():
    assert phi(cat.family_As(0), 2) == 6
    assert phi(cat.family_As(2), 2) == 1
    assert phi(cat.family_As(3), 2) == 0


def test_As_t_space_is_spanned_by_the_shift_map():
    sp = derivation_space(cat.family_As(F(1, 2)), P.phi(F(1, 2)))
    assert sp.space == span([shift_D().vectorize()], 16)


# --- Omega and the centroid ----------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_omega_abelian(n):
    assert omega_space(alg.abelian(n)).dim == n * n


@pytest.mark.parametrize("m", [1, 2, 3])
def test_omega_aff_times_Km(m):
    # A/A^(2) has dim m+1, Z = K^m
    assert omega_space(cat.with_abelian_factor(cat.aff(), m)).dim == (m + 1) * m


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("s", [F(2), F(-1), F(1, 2)])
def test_omega_As_times_Km(s, m):
    assert omega_space(cat.with_abelian_factor(cat.family_As(s), m)).dim == (m + 2) * m


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_omega_formula_and_containment(entry):
    a = entry.algebra
    om = omega_space(a)
    n = a.dim
    assert om.dim == (n - alg.derived_algebra(a).dim) * alg.center(a).dim
    for t in T_SAMPLE:
        sp = derivation_space(a, P.phi(t))
        assert om.space.is_subspace_of(sp.space)


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_identity_in_centroid(entry):
    a = entry.algebra
    assert Matrix.identity(a.dim) in centroid(a)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_filiform_centroid(n):
    g = cat.standard_filiform(n)
    assert centroid(g).dim == 1 + omega_space(g).dim


# --- transport ------------------------------------------------------------

def test_transport_identity_scale():
    h = cat.heisenberg3()
    d = Matrix.diagonal([2, 2, 1])
    assert transport(h, d, 2, 2) == d


def test_transport_heisenberg():
    h = cat.heisenberg3()
    d = Matrix.diagonal([2, 2, 1])
    out = transport(h, d, 2, 3)
    assert out == Matrix.diagonal([3, 3, 1])
    assert satisfies(h, P.phi(3), out)


@pytest.mark.parametrize("a", NON_PERFECT_LIE, ids=ids)
def test_transport_to_one_lands_in_centroid(a):
    cent = centroid(a)
    for d in derivation_space(a, P.phi(-1)):
        assert transport(a, d, -1, 1) in cent


def test_transport_preconditions():
    h = cat.heisenberg3()
    d = Matrix.diagonal([2, 2, 1])
    with pytest.raises(PreconditionError):
        transport(h, d, 1, 2)
    with pytest.raises(PreconditionError):
        transport(h, Matrix.identity(3), 2, 3)
    with pytest.raises(PreconditionError):
        transport(cat.sl2(), Matrix.zeros(3), 2, 3)
    with pytest.raises(PreconditionError):
        transport(cat.family_As(2), Matrix.zeros(4), 2, 3)


@pytest.mark.parametrize("a", NON_PERFECT_LIE, ids=ids)
@pytest.mark.parametrize("t,s", [(F(2), F(-1)), (F(1, 2), F(3)), (F(-2), F(2))])
def test_transport_bijection(a, t, s):
    src = derivation_space(a, P.phi(t))
    dst = derivation_space(a, P.phi(s))
    assert src.dim == dst.dim
    for d in src:
        img = transport(a, d, t, s)
        assert img in dst
        assert transport(a, img, s, t) == d


@pytest.mark.parametrize("a", NON_PERFECT_LIE, ids=ids)
def test_transport_with_a_random_complement(a):
    rng = random.Random(a.label())
    g2 = alg.derived_algebra(a)
    coord = coordinate_complement(g2)
    skewed = span([tuple(c + sum(rng.randint(-2, 2) * b[k] for b in g2.basis) for k, c in enumerate(v))
                   for v in coord.basis], a.dim)
    dst = derivation_space(a, P.phi(3))
    imgs = [transport(a, d, 2, 3, complement=skewed) for d in derivation_space(a, P.phi(2))]
    assert all(m in dst for m in imgs)
    assert span([m.vectorize() for m in imgs], a.dim ** 2) == dst.space


# --- restriction to the derived algebra ----------------------------------

def test_restrict_omega_is_zero():
    g = cat.with_abelian_factor(cat.heisenberg3(), 1)
    for d in omega_space(g):
        assert restrict_to_derived(g, d, 2).is_zero()


def test_restrict_heisenberg():
    m = restrict_to_derived(cat.heisenberg3(), Matrix.diagonal([2, 2, 1]), 2)
    assert m == Matrix.from_rows([[1]])


def test_restrict_perfect_is_empty():
    m = restrict_to_derived(cat.sl2(), Matrix.zeros(3), 2)
    assert (m.rows, m.cols) == (0, 3)


@pytest.mark.parametrize("a", LIE, ids=ids)
@pytest.mark.parametrize("t", [F(2), F(-1)])
def test_derived_goes_to_center(a, t):
    for d in derivation_space(a, P.phi(t)):
        restrict_to_derived(a, d, t)


# --- nilpotency -------------------------------------------------------------

def test_is_nilpotent_examples():
    assert is_nilpotent(Matrix.zeros(3)) == 1
    assert is_nilpotent(Matrix.identity(2)) is None
    assert is_nilpotent(shift_D()) == 2
    assert is_nilpotent(cat.jordan_block(4)) == 4


@pytest.mark.parametrize("t", [F(2), F(3)])
def test_As_derivations_are_nilpotent(t):
    for d in derivation_space(cat.family_As(t), P.phi(t)):
        assert is_nilpotent(d) is not None


# --- products admitting a fixed map ------------------------------------------

def test_products_admitting_zero_map():
    assert products_admitting(Matrix.zeros(4), P.phi(2)) == Subspace.full(24)


@pytest.mark.parametrize("t", [F(2), F(3), F(-1), F(1, 2)])
def test_products_admitting_shift_map(t):
    assert products_admitting(shift_D(), P.phi(t)).dim == 4


def test_products_admitting_identity():
    # (1,1,1): mu = 2 mu forces the zero law; (1,1,0): mu = mu admits every law
    assert products_admitting(Matrix.identity(3), P(1, 1, 1)).dim == 0
    assert products_admitting(Matrix.identity(3), P(1, 1, 0)).dim == 9


@given(laws(dims=(2, 3)), st.sampled_from([P(2, 1, 0), P(1, 1, 0), P(0, 1, -1), P(1, 2, 3)]))
@settings(max_examples=25)
def test_products_admitting_agrees_with_derivation_space(a, p):
    # a law admits d exactly when d is a p-derivation of it; test on a basis map
    sp = derivation_space(a, p)
    for d in sp.basis[:2]:
        assert alg.structure_vector(a) in products_admitting(d, p)


# --- deformation cocycle ----------------------------------------------------------

def test_cocycle_of_zero_map():
    assert deformation_cocycle(cat.heisenberg3(), Matrix.zeros(3), 2) == alg.abelian(3)


def test_cocycle_heisenberg():
    lam = deformation_cocycle(cat.heisenberg3(), Matrix.diagonal([2, 2, 1]), 2)
    assert lam.constants == {(0, 1): (0, 0, 2)}


@pytest.mark.parametrize("a", LIE, ids=ids)
def test_deformations_stay_lie(a):
    for d in derivation_space(a, P.phi(2)):
        lam = deformation_cocycle(a, d, 2)
        assert alg.is_lie(lam)
        for s in (1, 2, 3):
            assert alg.is_lie(alg.deformed_product(a, lam, s))


# --- properties on random laws ---------------------------------------------------

PARAMS = st.sampled_from([P(2, 1, 0), P(-1, 1, 0), P(1, 1, 0), P(0, 1, -1), P(0, 1, 0),
                          P(1, 0, 0), P(F(1, 2), 1, 0), P(1, 2, 3)])


@given(laws(dims=(2, 3)), PARAMS)
@settings(max_examples=40)
def test_solver_is_sound_and_complete(a, p):
    sp = derivation_space(a, p)
    for d in sp:
        assert not identity_defects(a, p, d)
    assert sp.dim == derivation_dim(a, *p.as_tuple())


@given(laws(dims=(2, 3, 4)), st.sampled_from(T_SAMPLE))
@settings(max_examples=30)
def test_containment_chain(a, t):
    om = omega_space(a).space
    mid = derivation_space(a, P.phi(t)).space
    top = derivation_space(a, P(0, 1, -1)).space
    assert om.is_subspace_of(mid) and mid.is_subspace_of(top)


@given(laws(dims=(2, 3, 4)), st.sampled_from(T_SAMPLE + [F(1)]))
@settings(max_examples=30)
def test_centralizers_are_preserved(a, t):
    n = a.dim
    subs = [alg.center(a)] + [alg.centralizer(a, [unit_vector(n, i)]) for i in range(n)]
    for d in derivation_space(a, P.phi(t)):
        for sub in subs:
            for v in sub.basis:
                assert sub.contains(d.apply(v))


@given(laws(dims=(2, 3)), st.sampled_from(T_SAMPLE), st.data())
@settings(max_examples=30)
def test_gl_invariance(a, t, data):
    n = a.dim
    rows = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                              min_size=n, max_size=n))
    g = Matrix.from_rows(rows, cols=n)
    from derivscope.linalg import rank
    if rank(g) < n:
        return
    assert phi(alg.change_of_basis(a, g), t) == phi(a, t)
