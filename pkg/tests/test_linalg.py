from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linalg.errors import DimensionMismatch, DivisionByZero, Inconsistent, NotHermitian, Singular
from linalg.matrix import Matrix, basis_vec, dot, is_zero_vec, kron, vec, zero_vec
from linalg.scalar import I, ONE, ZERO, Scalar
from linalg.solve import determinant, invert, kernel, psd_check, rank, solve_linear
from linalg.tensor import flip_matrix, outer, pair2, slice_left, slice_right

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, fractions, fractions)
real_scalars = st.builds(Scalar, fractions)
small_ints = st.integers(min_value=-4, max_value=4)


def square_matrices(max_n=4, elements=small_ints):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(Matrix)


def rect_matrices(elements=small_ints):
    return st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
        lambda shape: st.lists(st.lists(elements, min_size=shape[1], max_size=shape[1]),
                               min_size=shape[0], max_size=shape[0])
    ).map(Matrix)


# ============================================================
# Scalar
# ============================================================

@given(scalars, scalars, scalars)
def test_scalar_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(scalars, scalars)
def test_scalar_division_inverts_multiplication(a, b):
    if b.is_zero():
        with pytest.raises(DivisionByZero):
            a / b
    else:
        assert (a / b) * b == a


@given(scalars)
def test_scalar_conjugate_norm(a):
    assert a * a.conj() == Scalar(a.norm2())
    assert a.conj().conj() == a


def test_scalar_canonical_form():
    assert Scalar("2/4") == Scalar(Fraction(1, 2))
    assert hash(Scalar(3)) == hash(Scalar("6/2"))
    assert I * I == -ONE
    assert str(Scalar(Fraction(-1, 2), 3)) == "-1/2+3i"
    assert str(Scalar(0, -1)) == "-1i"
    assert Scalar(1, 0).is_real()


def test_scalar_immutable():
    with pytest.raises(AttributeError):
        ONE.re = Fraction(2)


def test_scalar_rejects_float():
    with pytest.raises(TypeError):
        Scalar(0.5)


# ============================================================
# Matrix / solve
# ============================================================

@settings(max_examples=60)
@given(square_matrices())
def test_invert_matches_determinant(M):
    n = M.nrows
    if determinant(M).is_zero():
        assert rank(M) < n
        with pytest.raises(Singular):
            invert(M)
    else:
        inv = invert(M)
        assert inv @ M == Matrix.identity(n)
        assert M @ inv == Matrix.identity(n)


@settings(max_examples=60)
@given(rect_matrices(), st.data())
def test_solve_linear_reproduces_rhs(M, data):
    x0 = vec(data.draw(st.lists(small_ints, min_size=M.ncols, max_size=M.ncols)))
    rhs = M.apply(x0)
    x = solve_linear(M, rhs)
    assert M.apply(x) == rhs


@settings(max_examples=60)
@given(rect_matrices())
def test_kernel_rank_nullity(M):
    basis = kernel(M)
    assert len(basis) + rank(M) == M.ncols
    for v in basis:
        assert is_zero_vec(M.apply(v))


@settings(max_examples=40)
@given(rect_matrices(elements=st.builds(Scalar, small_ints, small_ints)))
def test_gram_of_any_matrix_is_psd(A):
    G = A.conj().T @ A
    assert psd_check(G)


def test_solve_inconsistent_system():
    M = Matrix([[1, 1], [1, 1]])
    with pytest.raises(Inconsistent):
        solve_linear(M, vec([1, 2]))


def test_overdetermined_consistent_system():
    M = Matrix([[1, 0], [0, 1], [1, 1]])
    assert solve_linear(M, vec([2, 3, 5])) == vec([2, 3])


def test_psd_rejects_indefinite_and_non_hermitian():
    assert not psd_check(Matrix([[1, 2], [2, 1]]))
    assert not psd_check(Matrix.diag([1, -1]))
    assert psd_check(Matrix([[0, 0], [0, 3]]))
    with pytest.raises(NotHermitian):
        psd_check(Matrix([[1, 1], [0, 1]]))


def test_complex_determinant_and_inverse():
    M = Matrix([[1, I], [I, 1]])
    assert determinant(M) == Scalar(2)
    assert invert(M) @ M == Matrix.identity(2)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionMismatch):
        dot(vec([1]), vec([1, 2]))


def test_left_apply_is_row_vector_product():
    M = Matrix([[1, 2], [3, 4]])
    assert M.left_apply(vec([1, 0])) == vec([1, 2])
    assert M.apply(vec([1, 0])) == vec([1, 3])
    assert M.T.apply(vec([1, 0])) == M.left_apply(vec([1, 0]))


# ============================================================
# Tensor2
# ============================================================

def test_outer_index_convention():
    t = outer(basis_vec(3, 1), basis_vec(3, 2))
    assert t[1 * 3 + 2] == ONE
    assert sum(1 for c in t if not c.is_zero()) == 1


def test_kron_matches_outer():
    A = Matrix([[1, 2], [0, 1]])
    B = Matrix([[0, 1], [1, 0]])
    x, y = vec([1, 2]), vec([3, 5])
    assert kron(A, B).apply(outer(x, y)) == outer(A.apply(x), B.apply(y))


def test_flip_and_slices():
    n = 2
    t = outer(vec([1, 2]), vec([3, 4]))
    f = vec([1, 1])
    assert flip_matrix(n).apply(t) == outer(vec([3, 4]), vec([1, 2]))
    assert slice_right(t, f, n) == vec([7, 14])
    assert slice_left(t, f, n) == vec([9, 12])
    assert pair2(t, f, f, n) == Scalar(21)
    assert slice_right(zero_vec(4), f, n) == zero_vec(2)


@settings(max_examples=40)
@given(square_matrices(max_n=2), square_matrices(max_n=2), st.data())
def test_kron_mixed_product(A, B, data):
    C = data.draw(st.lists(st.lists(small_ints, min_size=A.ncols, max_size=A.ncols),
                           min_size=A.ncols, max_size=A.ncols).map(Matrix))
    D = data.draw(st.lists(st.lists(small_ints, min_size=B.ncols, max_size=B.ncols),
                           min_size=B.ncols, max_size=B.ncols).map(Matrix))
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@settings(max_examples=40)
@given(square_matrices(max_n=3))
def test_positive_definite_has_positive_leading_minors(A):
    n = A.nrows
    G = A.T @ A + Matrix.identity(n)
    assert psd_check(G)
    for k in range(1, n + 1):
        minor = Matrix([G.row(i)[:k] for i in range(k)])
        assert determinant(minor).re > 0
