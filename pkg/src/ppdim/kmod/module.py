"""
kC_p-模 = k[T]/T^p-模：由维数与幂零作用矩阵 N 给出

约定：Jordan 块采用"生成元在前"的方向，N e_j = e_{j+1}，块内最后一个基向量被 N 消灭。
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np

from ..exactlin import Matrix, Vector, as_ints, is_prime, prime_field, rank
from ..exceptions.ppdim_exceptions import (
    DimensionMismatchException,
    FieldException,
    InvalidModuleException
)


@dataclass(frozen=True)
class Invariants:
    """不变量：Jordan 块大小的多重集，降序存储"""

    p: int
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldException(self.p)
        parts = tuple(int(x) for x in self.parts)
        for x in parts:
            if not 1 <= x <= self.p:
                raise InvalidModuleException(f"invariant {x} out of range [1, {self.p}]", p=self.p)
        object.__setattr__(self, 'parts', tuple(sorted(parts, reverse=True)))

    @classmethod
    def of(cls, p: int, *parts: int) -> 'Invariants':
        return cls(p, tuple(parts))

    @property
    def dim(self) -> int:
        return sum(self.parts)

    @property
    def count(self) -> int:
        """块的个数，即生成元个数"""
        return len(self.parts)

    def multiplicity(self, x: int) -> int:
        return self.parts.count(x)

    def union(self, other: 'Invariants') -> 'Invariants':
        """多重集并"""
        if other.p != self.p:
            raise InvalidModuleException(f"mismatched primes {self.p} and {other.p}")
        return Invariants(self.p, self.parts + other.parts)

    def is_permutation(self) -> bool:
        return all(x in (1, self.p) for x in self.parts)

    def is_cyclic(self) -> bool:
        return len(self.parts) == 1

    def counter(self) -> Counter:
        return Counter(self.parts)

    def as_list(self) -> List[int]:
        return list(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.parts) + "}"


def block_layout(inv: Invariants) -> List[Tuple[int, int]]:
    """规范模型中每个块的 (起始下标, 大小)"""
    layout = []
    offset = 0
    for x in inv.parts:
        layout.append((offset, x))
        offset += x
    return layout


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """kC_p-模：维数 dim 与 T 的作用矩阵 N"""

    p: int
    dim: int
    N: Matrix
    _powers: Dict[int, Matrix] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldException(self.p)
        if self.N.p != self.p:
            raise InvalidModuleException(f"action matrix over F_{self.N.p} for a module over F_{self.p}", p=self.p)
        if self.N.shape != (self.dim, self.dim):
            raise DimensionMismatchException("ModuleRep", (self.dim, self.dim), self.N.shape)

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], check: bool = True) -> 'ModuleRep':
        """由整数矩阵构造；check 为真时验证 N^p = 0"""
        N = Matrix.from_rows(p, rows)
        if not N.is_square():
            raise InvalidModuleException(f"action matrix must be square, got {N.rows}x{N.cols}", p=p)
        module = cls(p, N.rows, N)
        if check:
            module.validate()
        return module

    @classmethod
    def zero(cls, p: int) -> 'ModuleRep':
        return cls(p, 0, Matrix.zeros(p, 0, 0))

    @classmethod
    def cyclic(cls, p: int, x: int) -> 'ModuleRep':
        """M_x = k[T]/T^x"""
        return from_invariants(Invariants.of(p, x))

    def power(self, i: int) -> Matrix:
        """N^i（缓存）"""
        cached = self._powers.get(i)
        if cached is None:
            cached = self.N.power(i)
            self._powers[i] = cached
        return cached

    def is_valid(self) -> bool:
        return self.power(self.p).is_zero()

    def validate(self) -> 'ModuleRep':
        if not self.is_valid():
            raise InvalidModuleException("not a k[T]/T^p module: N^p != 0", p=self.p)
        return self

    def element(self, coords: Any) -> 'Element':
        return Element.of(self, coords)

    def zero_element(self) -> 'Element':
        return Element(prime_field(self.p).zeros(self.dim))

    def basis_element(self, j: int) -> 'Element':
        coords = np.zeros(self.dim, dtype=np.int64)
        coords[j] = 1
        return self.element(coords)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return self.p == other.p and self.N == other.N

    def __hash__(self) -> int:
        return hash((self.p, self.N))

    def __repr__(self) -> str:
        return f"ModuleRep(p={self.p}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Element:
    """模中的元素，坐标相对于模的基"""

    coords: Vector

    def __post_init__(self):
        self.coords.flags.writeable = False

    @classmethod
    def of(cls, module: ModuleRep, coords: Any) -> 'Element':
        vector = prime_field(module.p).array(coords).reshape(-1)
        if vector.shape[0] != module.dim:
            raise DimensionMismatchException("Element", module.dim, vector.shape[0])
        return cls(vector)

    @property
    def dim(self) -> int:
        return self.coords.shape[0]

    def is_zero(self) -> bool:
        return not np.any(self.coords.view(np.ndarray))

    def to_list(self) -> List[int]:
        return [int(v) for v in as_ints(self.coords)]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.to_list() == other.to_list()

    def __hash__(self) -> int:
        return hash(tuple(self.to_list()))

    def __repr__(self) -> str:
        return f"Element({self.to_list()})"


def coordinates(module: ModuleRep, m: Any) -> Vector:
    """元素或整数序列 -> 长度校验过的坐标向量"""
    if isinstance(m, Element):
        if m.dim != module.dim:
            raise DimensionMismatchException("element", module.dim, m.dim)
        return m.coords
    return Element.of(module, m).coords


def from_invariants(inv: Invariants) -> ModuleRep:
    """不变量 -> 规范模型（分块对角，块按降序排列）"""
    N = np.zeros((inv.dim, inv.dim), dtype=np.int64)
    for offset, size in block_layout(inv):
        for j in range(size - 1):
            N[offset + j + 1, offset + j] = 1
    return ModuleRep(inv.p, inv.dim, Matrix.from_array(inv.p, N))


def decompose(M: ModuleRep) -> Invariants:
    """
    不变量：块大小 i 的重数为 rank(N^{i-1}) - 2·rank(N^i) + rank(N^{i+1})
    """
    M.validate()
    ranks = [M.dim] + [rank(M.power(i)) for i in range(1, M.p + 2)]
    parts: List[int] = []
    for i in range(1, M.p + 1):
        parts.extend([i] * (ranks[i - 1] - 2 * ranks[i] + ranks[i + 1]))
    return Invariants(M.p, tuple(parts))


def is_canonical(M: ModuleRep) -> bool:
    """作用矩阵是否恰为规范模型"""
    return M == from_invariants(decompose(M))


def _same_prime(M: ModuleRep, other: ModuleRep, operation: str) -> None:
    if M.p != other.p:
        raise InvalidModuleException(f"{operation}: mismatched primes {M.p} and {other.p}")


def direct_sum(M: ModuleRep, other: ModuleRep) -> ModuleRep:
    """直和：分块对角作用"""
    _same_prime(M, other, "direct_sum")
    return ModuleRep(M.p, M.dim + other.dim, Matrix.block_diag(M.p, [M.N, other.N]))


def direct_sum_all(p: int, modules: Sequence[ModuleRep]) -> ModuleRep:
    result = ModuleRep.zero(p)
    for module in modules:
        result = direct_sum(result, module)
    return result


def tensor(M: ModuleRep, other: ModuleRep) -> ModuleRep:
    """张量积（对角群作用）：T 作用为 N⊗I + I⊗N' + N⊗N'"""
    _same_prime(M, other, "tensor")
    left = M.N.kron(Matrix.identity(M.p, other.dim))
    right = Matrix.identity(M.p, M.dim).kron(other.N)
    both = M.N.kron(other.N)
    return ModuleRep(M.p, M.dim * other.dim, left + right + both).validate()
