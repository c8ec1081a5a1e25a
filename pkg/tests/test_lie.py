import numpy as np
import pytest
from hypothesis import given, strategies as st

from liext.field import GF, QQ
from liext.lie import (
    CATALOG_NAMES,
    LieError,
    abelian,
    ad,
    catalog,
    center,
    change_basis,
    check_lie,
    derivation_defect,
    derivations,
    derived_subalgebra,
    direct_product,
    inner_derivations,
    is_ideal,
    is_isomorphism,
    is_lie,
    is_perfect,
    is_subalgebra,
    make_lie_algebra,
    outer_dimension,
    unvec_endo,
    vec_endo,
)
from strategies import invertible

NAMES = [n.replace(":n", ":3") for n in CATALOG_NAMES]


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_catalog_is_lie(name, field):
    assert check_lie(catalog(name, field)).ok


def test_make_rejects_bad_entries():
    with pytest.raises(LieError):
        make_lie_algebra("x", QQ, 2, [((1, 0), {0: 1})])
    with pytest.raises(LieError):
        make_lie_algebra("x", QQ, 2, [((0, 1), {2: 1})])
    with pytest.raises(LieError):
        make_lie_algebra("x", QQ, 2, [((0, 1), {0: 1}), ((0, 1), {1: 1})])


def test_check_lie_reports_witnesses():
    # [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 breaks Jacobi
    L = make_lie_algebra("bad", QQ, 3, [((0, 1), {2: 1}), ((1, 2), {0: 1}), ((0, 2), {0: 1})])
    rep = check_lie(L)
    assert rep["ALT"].passed
    assert not rep["JACOBI"].passed and rep["JACOBI"].witnesses
    raw = QQ.zeros((1, 1, 1))
    raw[0, 0, 0] = QQ.scalar(1)
    from liext.lie import LieAlgebra

    assert not check_lie(LieAlgebra("raw", QQ, raw))["ALT"].passed


@pytest.mark.parametrize(
    "name,der,inn,cen",
    [("abelian:3", 9, 0, 3), ("heisenberg3", 6, 2, 1), ("nonabelian2", 2, 2, 0),
     ("sl2", 3, 3, 0), ("gl2", 4, 3, 1), ("perfect5", 6, 5, 0)],
)
def test_derivation_dimensions(name, der, inn, cen):
    L = catalog(name)
    assert derivations(L).dim == der
    assert inner_derivations(L).dim == inn
    assert center(L).dim == cen
    assert outer_dimension(L) == der - inn


def test_perfectness():
    assert is_perfect(catalog("sl2"))
    assert is_perfect(catalog("perfect5"))
    assert not is_perfect(catalog("gl2"))
    assert derived_subalgebra(catalog("gl2")).dim == 3


@pytest.mark.parametrize("name", NAMES)
def test_derivation_basis_satisfies_identity(name):
    L = catalog(name)
    for v in derivations(L):
        assert L.field.is_zero(derivation_defect(L, unvec_endo(v, L.dim)))
    assert derivations(L).contains_space(inner_derivations(L))


def test_vec_is_column_major():
    D = QQ.array([[1, 2], [3, 4]])
    assert vec_endo(D).tolist() == [1, 3, 2, 4]
    assert (unvec_endo(vec_endo(D), 2) == D).all()


def test_ad_columns_are_brackets():
    L = catalog("sl2")
    A = ad(L, L.basis_vector(0))
    assert A[:, 1].tolist() == [0, 2, 0]  # [h, e] = 2e
    assert A[:, 2].tolist() == [0, 0, -2]


def test_subalgebra_and_ideal():
    gl = catalog("gl2")
    assert is_ideal(gl, derived_subalgebra(gl).vectors)
    assert is_subalgebra(gl, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert not is_subalgebra(gl, [[0, 1, 0, 0], [0, 0, 1, 0]])


def test_direct_product_and_isomorphism():
    P = direct_product(catalog("sl2"), abelian(1))
    assert P.dim == 4 and is_lie(P)
    perm = QQ.zeros((4, 4))
    for old, new in enumerate([3, 0, 1, 2]):
        perm[new, old] = QQ.scalar(1)
    Q = change_basis(P, perm)
    assert is_isomorphism(Q, P, perm)
    assert not is_isomorphism(P, catalog("gl2"), QQ.eye(4))


@given(st.sampled_from(["heisenberg3", "sl2", "gl2", "nonabelian2"]), st.data())
def test_change_of_basis_preserves_invariants(name, data):
    L = catalog(name)
    P = data.draw(invertible(L.dim))
    M = change_basis(L, P)
    assert is_lie(M)
    assert is_isomorphism(M, L, P)
    assert derivations(M).dim == derivations(L).dim
    assert center(M).dim == center(L).dim


def test_unknown_catalog_name():
    with pytest.raises(LieError):
        catalog("so3")
    with pytest.raises(LieError):
        catalog("abelian:x")
    assert catalog("abelian:0").dim == 0
    assert np.all(catalog("abelian:2", GF(3)).sc == 0)
