"""
F_p 上的不可变稠密矩阵
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Union

import galois
import numpy as np

from .field import PrimeField, as_ints, prime_field
from ..exceptions.ppdim_exceptions import DimensionMismatchException, FieldException

# 列向量用一维 galois.FieldArray 表示
Vector = galois.FieldArray


def _freeze(array: galois.FieldArray) -> galois.FieldArray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Matrix:
    """F_p 上的矩阵，数据只读，所有运算返回新矩阵"""

    field: PrimeField
    data: galois.FieldArray

    def __post_init__(self):
        if self.data.ndim != 2:
            raise DimensionMismatchException("Matrix", "2-dimensional array", f"{self.data.ndim}-dimensional")
        _freeze(self.data)

    # ---- 构造 ----

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], cols: int = None) -> 'Matrix':
        """由整数行构造，元素先约化到 [0, p-1]"""
        field = prime_field(p)
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(p, 0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchException("Matrix.from_rows", f"rows of length {width}",
                                             [len(r) for r in rows])
        return cls(field, field.array(rows))

    @classmethod
    def from_array(cls, p: int, array: Any) -> 'Matrix':
        field = prime_field(p)
        return cls(field, field.array(array))

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[Any], rows: int) -> 'Matrix':
        """由列向量构造 rows × len(columns) 矩阵"""
        if not columns:
            return cls.zeros(p, rows, 0)
        stacked = np.stack([as_ints(c).reshape(-1) for c in columns], axis=1)
        if stacked.shape[0] != rows:
            raise DimensionMismatchException("Matrix.from_columns", rows, stacked.shape[0])
        return cls.from_array(p, stacked)

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> 'Matrix':
        field = prime_field(p)
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, p: int, n: int) -> 'Matrix':
        field = prime_field(p)
        return cls(field, field.identity(n) if n else field.zeros((0, 0)))

    @classmethod
    def block_diag(cls, p: int, blocks: Sequence['Matrix']) -> 'Matrix':
        """分块对角矩阵"""
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((rows, cols), dtype=np.int64)
        r = c = 0
        for block in blocks:
            out[r:r + block.rows, c:c + block.cols] = block.to_numpy()
            r += block.rows
            c += block.cols
        return cls.from_array(p, out)

    @classmethod
    def hstack(cls, p: int, blocks: Sequence['Matrix'], rows: int = 0) -> 'Matrix':
        if not blocks:
            return cls.zeros(p, rows, 0)
        return cls.from_array(p, np.hstack([b.to_numpy() for b in blocks]))

    @classmethod
    def vstack(cls, p: int, blocks: Sequence['Matrix'], cols: int = 0) -> 'Matrix':
        if not blocks:
            return cls.zeros(p, 0, cols)
        return cls.from_array(p, np.vstack([b.to_numpy() for b in blocks]))

    # ---- 属性 ----

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def entries(self) -> List[int]:
        """行优先展开的元素"""
        return [int(v) for v in self.to_numpy().reshape(-1)]

    def to_numpy(self) -> np.ndarray:
        """转为普通 int64 数组（副本）"""
        return np.array(self.data.view(np.ndarray), dtype=np.int64)

    def to_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.to_numpy()]

    def column(self, j: int) -> Vector:
        return self.field.GF(self.to_numpy()[:, j])

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not np.any(self.data.view(np.ndarray))

    def is_square(self) -> bool:
        return self.rows == self.cols

    # ---- 运算 ----

    def _check_field(self, other: 'Matrix', operation: str) -> None:
        if other.p != self.p:
            raise FieldException(other.p, f"{operation}: mixing F_{self.p} and F_{other.p}")

    def __matmul__(self, other: Union['Matrix', Vector]) -> Union['Matrix', Vector]:
        if isinstance(other, Matrix):
            self._check_field(other, "matmul")
            if self.cols != other.rows:
                raise DimensionMismatchException("matmul", f"{self.cols} rows", other.rows)
            if self.cols == 0 or self.rows == 0 or other.cols == 0:
                return Matrix.zeros(self.p, self.rows, other.cols)
            return Matrix(self.field, self.data @ other.data)
        vector = self.field.array(other).reshape(-1)
        if vector.shape[0] != self.cols:
            raise DimensionMismatchException("matrix-vector product", self.cols, vector.shape[0])
        if self.cols == 0 or self.rows == 0:
            return self.field.zeros(self.rows)
        return self.data @ vector

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other, "add")
        if self.shape != other.shape:
            raise DimensionMismatchException("add", self.shape, other.shape)
        return Matrix(self.field, self.data + other.data)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other, "sub")
        if self.shape != other.shape:
            raise DimensionMismatchException("sub", self.shape, other.shape)
        return Matrix(self.field, self.data - other.data)

    def __neg__(self) -> 'Matrix':
        return Matrix(self.field, -self.data)

    def scale(self, c: int) -> 'Matrix':
        return Matrix(self.field, self.data * self.field.element(c))

    def power(self, k: int) -> 'Matrix':
        """矩阵幂 A^k，k >= 0"""
        if not self.is_square():
            raise DimensionMismatchException("power", "square matrix", self.shape)
        result = Matrix.identity(self.p, self.rows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> 'Matrix':
        return Matrix.from_array(self.p, self.to_numpy().T)

    @property
    def T(self) -> 'Matrix':
        return self.transpose()

    def kron(self, other: 'Matrix') -> 'Matrix':
        """Kronecker 积（整数上计算再取模）"""
        self._check_field(other, "kron")
        return Matrix.from_array(self.p, np.kron(self.to_numpy(), other.to_numpy()))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> 'Matrix':
        return Matrix.from_array(self.p, self.to_numpy()[np.ix_(list(rows), list(cols))])

    # ---- 比较 ----

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and \
            bool(np.array_equal(self.data.view(np.ndarray), other.data.view(np.ndarray)))

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self.to_numpy().tobytes()))

    def __repr__(self) -> str:
        return f"Matrix(p={self.p}, {self.rows}x{self.cols}, {self.to_lists()})"
