from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles as O
from rbsys import qlinalg as ql
from rbsys.qlinalg import Matrix

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def matrices(m, n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m).map(lambda r: Matrix.of(r, n))


def test_rationals():
    assert ql.q("2/4") == Fraction(1, 2)
    assert ql.q("-3") == -3 and ql.q(5) == 5
    assert ql.qstr(Fraction(-2, 6)) == "-1/3" and ql.qstr(Fraction(4, 2)) == "2" and ql.qstr(Fraction(0)) == "0"


def test_identity_rank_and_kernel():
    I = Matrix.identity(3)
    assert ql.rank(I) == 3 and ql.kernel(I).dim == 0


def test_zero_matrix():
    Z = Matrix.zero(2)
    assert ql.rank(Z) == 0 and ql.kernel(Z) == ql.full_space(2)


def test_rank_one_kernel():
    M = Matrix.of([[1, 2], [2, 4]])
    assert ql.rank(M) == 1
    assert ql.kernel(M) == ql.span([[-2, 1]], 2)
    assert ql.image(M) == ql.span([[1, 2]], 2)


def test_rref_pivots():
    R, rk, piv = ql.rref(Matrix.of([[0, 2, 4], [1, 1, 1]]))
    assert rk == 2 and piv == (0, 1)
    assert R.rows == ((1, 0, -1), (0, 1, 2))


def test_big_integers_stay_exact():
    M = Matrix.of([[10**30, 1], [1, Fraction(1, 10**30)]])
    assert ql.rank(M) == 1
    A = Matrix.of([[3, 1], [7, 2]])
    P = A
    for _ in range(60):
        P = P @ A
    assert P @ ql.inverse(P) == Matrix.identity(2)


def test_sum_and_intersection():
    U = ql.span([[1, 0, 0], [0, 1, 0]], 3)
    assert ql.subspace_sum(U, U) == U and ql.subspace_intersect(U, U) == U
    x, y = ql.span([[1, 0]], 2), ql.span([[0, 1]], 2)
    assert ql.subspace_sum(x, y) == ql.full_space(2)
    assert ql.subspace_intersect(x, y) == ql.zero_space(2)


def test_canonical_basis():
    U = ql.span([[2, 4], [1, 2]], 2)
    W = ql.span([[Fraction(1, 3), Fraction(2, 3)]], 2)
    assert U == W and ql.equal(U, W) and U.basis == ((1, 2),)


def test_containment():
    U = ql.span([[1, 1, 0]], 3)
    assert U.contains([2, 2, 0]) and not U.contains([1, 0, 0])
    assert ql.is_subspace_of(U, ql.span([[1, 0, 0], [0, 1, 0]], 3))


def test_solve_and_coordinates():
    M = Matrix.of([[1, 2], [3, 4]])
    assert ql.solve(M, [5, 11]) == (1, 2)
    assert ql.solve(Matrix.of([[1, 1], [1, 1]]), [1, 2]) is None
    assert ql.coordinates([(1, 0, 1), (0, 1, 0)], (2, 3, 2)) == (2, 3)
    assert ql.coordinates([(1, 0, 1)], (1, 0, 0)) is None


def test_inverse_singular():
    with pytest.raises(ql.SingularMatrix):
        ql.inverse(Matrix.of([[1, 2], [2, 4]]))


def test_shape_errors():
    with pytest.raises(ql.DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ql.DimensionMismatch):
        Matrix.identity(2).apply((1, 2, 3))
    with pytest.raises(ql.DimensionMismatch):
        ql.subspace_sum(ql.full_space(2), ql.full_space(3))
    with pytest.raises(ql.DimensionMismatch):
        Matrix.of([[1, 2], [3]])


def test_extend_basis():
    added = ql.extend_basis([(1, 0, 0)], [(2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], 3)
    assert added == [(0, 1, 0), (0, 0, 1)]


@given(matrices(3, 4))
def test_rank_nullity_and_kernel(M):
    K = ql.kernel(M)
    assert K.dim + ql.rank(M) == 4
    assert all(ql.is_zero(M.apply(v)) for v in K.basis)
    assert ql.rank(M) == O.rank([list(r) for r in M.rows])


@given(matrices(2, 4), matrices(2, 4))
def test_dimension_formula(A, B):
    U, W = ql.span(A.rows, 4), ql.span(B.rows, 4)
    S, X = ql.subspace_sum(U, W), ql.subspace_intersect(U, W)
    assert U.dim + W.dim == S.dim + X.dim
    assert ql.is_subspace_of(X, U) and ql.is_subspace_of(X, W)


@given(matrices(3, 3))
def test_inverse_round_trip(M):
    try:
        Minv = ql.inverse(M)
    except ql.SingularMatrix:
        assert ql.rank(M) < 3
        return
    assert M @ Minv == Matrix.identity(3) == Minv @ M


@given(matrices(3, 3), matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_matrix_algebra(A, B, v):
    assert (A @ B).apply(v) == A.apply(B.apply(v))
    assert (A + B) - B == A
    assert (A @ B).T() == B.T() @ A.T()
