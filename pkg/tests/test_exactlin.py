import itertools

import numpy as np
import pytest

from ppdim.exactlin import (
    Matrix,
    as_ints,
    enumerate_vectors,
    inverse,
    kernel_basis,
    left_kernel_matrix,
    prime_field,
    random_invertible,
    random_matrix,
    rank,
    solve
)
from ppdim.exceptions import BudgetExceededException, DimensionMismatchException, FieldException


def test_rank_examples():
    assert rank(Matrix.zeros(3, 3, 3)) == 0
    assert rank(Matrix.identity(5, 2)) == 2
    assert rank(Matrix.from_rows(5, [[1, 2], [2, 4]])) == 1


def test_from_rows_reduces_entries():
    A = Matrix.from_rows(5, [[-1, 7], [5, 12]])
    assert A.to_lists() == [[4, 2], [0, 2]]


def test_solve_identity_returns_rhs():
    b = [3, 0, 4]
    x = solve(Matrix.identity(5, 3), b)
    assert as_ints(x).tolist() == b


def test_solve_inconsistent_returns_none():
    assert solve(Matrix.zeros(3, 2, 2), [1, 0]) is None


def test_solve_underdetermined():
    A = Matrix.from_rows(3, [[1, 1], [0, 0]])
    x = as_ints(solve(A, [2, 0]))
    assert (x[0] + x[1]) % 3 == 2


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatchException):
        solve(Matrix.identity(3, 2), [1, 2, 0])


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(5, 4)) == []
    basis = kernel_basis(Matrix.zeros(3, 3, 3))
    assert len(basis) == 3
    assert rank(Matrix.from_columns(3, basis, 3)) == 3

    A = Matrix.from_rows(3, [[1, 2]])
    (v,) = kernel_basis(A)
    assert not np.any(as_ints(A @ v))


def test_left_kernel():
    A = Matrix.from_rows(5, [[1, 2], [2, 4], [0, 1]])
    Y = left_kernel_matrix(A)
    assert Y.rows == 3 - rank(A)
    assert (Y @ A).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_nullity(p, rng):
    for _ in range(20):
        rows, cols = rng.integers(1, 6, size=2)
        A = random_matrix(p, int(rows), int(cols), rng)
        assert rank(A) + len(kernel_basis(A)) == A.cols


@pytest.mark.parametrize("p", [2, 3, 5])
def test_solve_agrees_with_enumeration(p, rng):
    for _ in range(10):
        A = random_matrix(p, 3, 3, rng)
        A = Matrix.from_array(p, A.to_numpy() * rng.integers(0, 2, size=(3, 1)))
        b = rng.integers(0, p, size=3)
        x = solve(A, b)
        solutions = [v for v in itertools.product(range(p), repeat=3)
                     if np.array_equal(np.mod(A.to_numpy() @ np.array(v), p), b)]
        if x is None:
            assert solutions == []
        else:
            assert np.array_equal(as_ints(A @ x), b)


def test_rank_invariant_under_invertible(rng):
    for _ in range(10):
        A = random_matrix(5, 4, 3, rng)
        S = random_invertible(5, 4, rng)
        T = random_invertible(5, 3, rng)
        assert rank(S @ A @ T) == rank(A)
        assert rank(A.submatrix([3, 1, 0, 2], [2, 0, 1])) == rank(A)


def test_inverse(rng):
    S = random_invertible(7, 4, rng)
    assert S @ inverse(S) == Matrix.identity(7, 4)
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix.zeros(7, 2, 2))


def test_matrix_is_read_only():
    A = Matrix.identity(3, 2)
    with pytest.raises(ValueError):
        A.data[0, 0] = 2


def test_non_prime_field():
    with pytest.raises(FieldException, match="p must be prime"):
        prime_field(4)
    with pytest.raises(FieldException):
        Matrix.identity(9, 2)


def test_enumerate_vectors():
    E = enumerate_vectors(3, 2)
    assert E.shape == (2, 9)
    assert len({tuple(c) for c in E.to_numpy().T}) == 9
    assert enumerate_vectors(5, 0).shape == (0, 1)
    with pytest.raises(BudgetExceededException):
        enumerate_vectors(5, 6, limit=1000)


def test_kron_and_block_diag():
    A = Matrix.from_rows(3, [[1, 2]])
    B = Matrix.identity(3, 2)
    assert A.kron(B).to_lists() == [[1, 0, 2, 0], [0, 1, 0, 2]]
    D = Matrix.block_diag(3, [A, Matrix.zeros(3, 0, 0), B])
    assert D.shape == (3, 4)
    assert D.to_lists() == [[1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
