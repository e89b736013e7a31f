"""
F_p 上的精确线性代数：秩、解方程、零空间

行化简使用 galois 的 row_reduce（带模逆的 Gauss 消元），输入矩阵从不被修改。
"""

import itertools
from typing import Any, List, Optional, Tuple

import numpy as np

from .field import as_ints, prime_field
from .matrix import Matrix, Vector
from ..exceptions.ppdim_exceptions import BudgetExceededException, DimensionMismatchException


def row_echelon(A: Matrix) -> Tuple[Matrix, Tuple[Tuple[int, int], ...]]:
    """
    约化行阶梯形

    Returns:
        (R, pivots)，pivots 为 (行, 主元列) 列表
    """
    if A.rows == 0 or A.cols == 0:
        return A, ()
    R = A.data.row_reduce()
    values = R.view(np.ndarray)
    pivots = []
    for r in range(values.shape[0]):
        nonzero = np.flatnonzero(values[r])
        if nonzero.size == 0:
            break
        pivots.append((r, int(nonzero[0])))
    return Matrix(A.field, R), tuple(pivots)


def rank(A: Matrix) -> int:
    """行空间维数"""
    if A.rows == 0 or A.cols == 0:
        return 0
    return int(np.linalg.matrix_rank(A.data))


def solve(A: Matrix, b: Any) -> Optional[Vector]:
    """
    求 A·x = b 的一个解，无解返回 None

    自由变量取零，因此结果是确定的。
    """
    field = A.field
    rhs = field.array(b).reshape(-1)
    if rhs.shape[0] != A.rows:
        raise DimensionMismatchException("solve", A.rows, rhs.shape[0])
    if A.cols == 0:
        return field.zeros(0) if not np.any(rhs.view(np.ndarray)) else None
    if A.rows == 0:
        return field.zeros(A.cols)

    augmented = Matrix.from_array(A.p, np.hstack([A.to_numpy(), as_ints(rhs).reshape(-1, 1)]))
    R, pivots = row_echelon(augmented)
    values = R.to_numpy()
    x = np.zeros(A.cols, dtype=np.int64)
    for row, col in pivots:
        if col == A.cols:
            return None
        x[col] = values[row, A.cols]
    return field.array(x)


def kernel_basis(A: Matrix) -> List[Vector]:
    """零空间的一组基，大小为 cols - rank(A)"""
    field = A.field
    if A.cols == 0:
        return []
    if A.rows == 0:
        return [field.array(row) for row in np.eye(A.cols, dtype=np.int64)]

    R, pivots = row_echelon(A)
    values = R.to_numpy()
    pivot_cols = {col: row for row, col in pivots}
    basis = []
    for free in range(A.cols):
        if free in pivot_cols:
            continue
        v = np.zeros(A.cols, dtype=np.int64)
        v[free] = 1
        for col, row in pivot_cols.items():
            v[col] = -values[row, free]
        basis.append(field.array(v))
    return basis


def kernel_matrix(A: Matrix) -> Matrix:
    """零空间基按列排成的矩阵"""
    return Matrix.from_columns(A.p, kernel_basis(A), A.cols)


def left_kernel_matrix(A: Matrix) -> Matrix:
    """左零空间：行向量 y 满足 y·A = 0，按行排列"""
    basis = kernel_basis(A.transpose())
    if not basis:
        return Matrix.zeros(A.p, 0, A.rows)
    return Matrix.from_rows(A.p, [as_ints(v) for v in basis])


def inverse(A: Matrix) -> Matrix:
    """可逆方阵的逆"""
    if not A.is_square():
        raise DimensionMismatchException("inverse", "square matrix", A.shape)
    if A.rows == 0:
        return A
    if rank(A) != A.rows:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(A.field, np.linalg.inv(A.data))


def random_matrix(p: int, rows: int, cols: int, rng: np.random.Generator) -> Matrix:
    return Matrix.from_array(p, rng.integers(0, p, size=(rows, cols)))


def random_invertible(p: int, n: int, rng: np.random.Generator) -> Matrix:
    """随机可逆矩阵（拒绝采样）"""
    while True:
        candidate = random_matrix(p, n, n, rng)
        if rank(candidate) == n:
            return candidate


def enumerate_vectors(p: int, n: int, limit: Optional[int] = None) -> Matrix:
    """
    F_p^n 的全部向量，按列排列（n × p^n）

    Args:
        limit: 元素个数上限，超出时抛出 BudgetExceededException
    """
    count = p ** n
    if limit is not None and count > limit:
        raise BudgetExceededException(f"enumerating F_{p}^{n} needs {count} elements", budget=limit)
    prime_field(p)
    if n == 0:
        return Matrix.zeros(p, 0, 1)
    columns = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).T
    return Matrix.from_array(p, columns)
