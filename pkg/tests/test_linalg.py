from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from liext.field import GF, QQ
from liext.linalg import SubspaceBasis, inverse, is_invertible, nullspace, rank, rref, solve_affine


def test_rank_examples():
    assert rank(QQ.array([[1, 2], [2, 4]]), QQ) == 1
    assert rank(QQ.array([[1, 2, 3]]), QQ) == 1
    assert rank(QQ.zeros((2, 3)), QQ) == 0


def test_rref_is_canonical():
    R, pivots, rk = rref(QQ.array([[0, 2, 4], [1, 1, 1]]), QQ)
    assert pivots == [0, 1] and rk == 2
    assert R.tolist() == [[1, 0, -1], [0, 1, 2]]


def test_nullspace_example():
    ns = nullspace(QQ.array([[1, 2, 3]]), QQ)
    assert ns.dim == 2
    for v in ns:
        assert sum(a * b for a, b in zip([1, 2, 3], v)) == 0


def test_solve_affine_feasible_and_not():
    A = QQ.array([[1, 1], [1, -1]])
    sol = solve_affine(A, QQ.array([3, 1]), QQ)
    assert sol.feasible and sol.particular.tolist() == [2, 1]
    assert sol.homogeneous.dim == 0
    sol = solve_affine(QQ.array([[1, 1], [2, 2]]), QQ.array([1, 3]), QQ)
    assert not sol.feasible


def test_inverse_prime_field():
    F = GF(7)
    M = F.array([[3]])
    assert inverse(M, F).tolist() == [[5]]
    assert inverse(F.array([[1, 2], [2, 4]]), F) is None
    assert inverse(F.zeros((0, 0)), F).shape == (0, 0)


def test_subspace_equality_is_basis_independent():
    a = SubspaceBasis.span([[1, 1, 0], [0, 1, 1]], 3, QQ)
    b = SubspaceBasis.span([[1, 2, 1], [1, 0, -1]], 3, QQ)
    assert a == b
    assert a.contains([2, 3, 1])
    assert not a.contains([1, 0, 0])
    assert a.coordinates([1, 1, 0]) is not None
    assert a.coordinates([1, 0, 0]) is None


small = st.integers(-3, 3)


@st.composite
def matrices(draw, field=QQ):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return field.array(rows)


@given(matrices())
def test_rank_nullity(M):
    assert rank(M, QQ) + nullspace(M, QQ).dim == M.shape[1]
    for v in nullspace(M, QQ):
        assert QQ.is_zero(M @ v)


@given(matrices(GF(5)))
def test_rank_nullity_prime(M):
    F = GF(5)
    assert rank(M, F) + nullspace(M, F).dim == M.shape[1]
    for v in nullspace(M, F):
        assert F.is_zero(M @ v)


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_affine_solutions_solve(M, x):
    b = QQ.reduce(M @ QQ.array(x[: M.shape[1]]))
    sol = solve_affine(M, b, QQ)
    assert sol.feasible
    assert QQ.is_zero(M @ sol.particular - b)


@given(st.integers(1, 4), st.data())
def test_inverse_is_two_sided(n, data):
    rows = data.draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))
    M = QQ.array(rows)
    Mi = inverse(M, QQ)
    assert (Mi is not None) == is_invertible(M, QQ)
    if Mi is not None:
        assert QQ.is_zero(M @ Mi - QQ.eye(n))
        assert QQ.is_zero(Mi @ M - QQ.eye(n))
        assert all(isinstance(x, Fraction) for x in Mi.ravel())


def test_object_dtype_is_preserved():
    M = np.array([[Fraction(1, 2), 1], [1, 1]], dtype=object)
    R, _, _ = rref(M, QQ)
    assert R.dtype == object
