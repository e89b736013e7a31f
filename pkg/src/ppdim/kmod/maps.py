"""
等变映射、Jordan 基与 Hom 空间
"""

from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from .module import (
    Element,
    Invariants,
    ModuleRep,
    block_layout,
    coordinates,
    decompose,
    from_invariants
)
from ..exactlin import Matrix, as_ints, inverse, kernel_basis, kernel_matrix, rank, solve
from ..exceptions.ppdim_exceptions import (
    DimensionMismatchException,
    InvalidModuleException,
    NotCyclicException,
    NotEquivariantException
)
from ..extensions.memo import MemoTable
from ..utils.logger import get_logger

logger = get_logger('kmod')

_canonical_models: MemoTable[ModuleRep, Tuple[ModuleRep, 'EquivariantMap']] = \
    MemoTable('canonical_models', max_size=512)


@dataclass(frozen=True, eq=False)
class EquivariantMap:
    """
    等变映射 f: source -> target

    矩阵 A 形状为 target.dim × source.dim，构造时校验 A·N_source = N_target·A。
    """

    source: ModuleRep
    target: ModuleRep
    A: Matrix

    def __post_init__(self):
        if self.source.p != self.target.p or self.A.p != self.source.p:
            raise InvalidModuleException("equivariant map between modules over different fields")
        expected = (self.target.dim, self.source.dim)
        if self.A.shape != expected:
            raise DimensionMismatchException("EquivariantMap", expected, self.A.shape)
        if not (self.A @ self.source.N) == (self.target.N @ self.A):
            raise NotEquivariantException()

    @classmethod
    def zero(cls, source: ModuleRep, target: ModuleRep) -> 'EquivariantMap':
        return cls(source, target, Matrix.zeros(source.p, target.dim, source.dim))

    @classmethod
    def identity(cls, module: ModuleRep) -> 'EquivariantMap':
        return cls(module, module, Matrix.identity(module.p, module.dim))

    @property
    def p(self) -> int:
        return self.source.p

    def rank(self) -> int:
        return rank(self.A)

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_zero(self) -> bool:
        return self.A.is_zero()

    def apply(self, m: Any) -> Element:
        return Element(self.A @ coordinates(self.source, m))

    def compose(self, other: 'EquivariantMap') -> 'EquivariantMap':
        """self ∘ other"""
        if not other.target == self.source:
            raise InvalidModuleException("compose: target of the inner map is not the source of the outer map")
        return EquivariantMap(other.source, self.target, self.A @ other.A)

    def __repr__(self) -> str:
        return f"EquivariantMap({self.source.dim} -> {self.target.dim}, rank={self.rank()})"


def _stack_columns(p: int, rows: int, columns: List[Any]) -> Matrix:
    return Matrix.from_columns(p, columns, rows)


def jordan_basis(M: ModuleRep) -> Matrix:
    """
    Jordan 基：S 的列依次为 g, Ng, ..., N^{x-1}g（各块按大小降序）

    自顶向下逐层选取：第 k 层的新生成元取自 ker N^k，且与 ker N^{k-1} 以及
    更大块下推到该层的向量线性无关。S·N_canonical = N·S。
    """
    inv = decompose(M)
    p, n = M.p, M.dim
    if n == 0:
        return Matrix.zeros(p, 0, 0)

    kernels = [kernel_basis(M.power(k)) for k in range(p + 1)]
    level: List[Any] = []
    generators: List[Tuple[Any, int]] = []
    for k in range(p, 0, -1):
        level = [M.N @ v for v in level]
        base = kernels[k - 1] + level
        base_rank = rank(_stack_columns(p, n, base)) if base else 0
        for candidate in kernels[k]:
            trial = _stack_columns(p, n, base + [candidate])
            if rank(trial) > base_rank:
                base.append(candidate)
                base_rank += 1
                generators.append((candidate, k))
                level.append(candidate)

    columns = []
    for g, size in generators:
        v = g
        for _ in range(size):
            columns.append(v)
            v = M.N @ v
    S = _stack_columns(p, n, columns)
    if S.cols != n or rank(S) != n:
        raise InvalidModuleException(f"Jordan basis construction failed for invariants {inv}", p=p)
    return S


def canonical_model(M: ModuleRep) -> Tuple[ModuleRep, EquivariantMap]:
    """规范模型 C 与同构 C -> M；M 已是规范形式时同构为恒等"""
    return _canonical_models.get_or_compute(M, lambda: _build_canonical_model(M))


def _build_canonical_model(M: ModuleRep) -> Tuple[ModuleRep, EquivariantMap]:
    C = from_invariants(decompose(M))
    if C == M:
        return M, EquivariantMap.identity(M)
    return C, EquivariantMap(C, M, jordan_basis(M))


def kernel_module(f: EquivariantMap) -> Tuple[ModuleRep, EquivariantMap]:
    """
    ker f 作为子模：返回规范形式的 K 与单射 g: K -> source，满足 f∘g = 0
    """
    p = f.p
    B = kernel_matrix(f.A)
    if B.cols == 0:
        K = ModuleRep.zero(p)
        return K, EquivariantMap.zero(K, f.source)

    # 限制作用 X：B·X = N·B
    NB = f.source.N @ B
    columns = []
    for j in range(NB.cols):
        x = solve(B, NB.column(j))
        if x is None:
            raise InvalidModuleException("kernel is not stable under T", p=p)
        columns.append(x)
    K_raw = ModuleRep(p, B.cols, _stack_columns(p, B.cols, columns))
    S = jordan_basis(K_raw)
    K = from_invariants(decompose(K_raw))
    return K, EquivariantMap(K, f.source, B @ S)


def _require_cyclic(M: ModuleRep) -> Invariants:
    inv = decompose(M)
    if not inv.is_cyclic():
        raise NotCyclicException(inv.as_list())
    return inv


def _canonical_homs(a_inv: Invariants, b_inv: Invariants) -> List[Matrix]:
    """规范模型之间 Hom 的基：块 s -> 块 t 的第 j 个映射把 e_s 送到 N^{max(0,b-a)+j} e_t"""
    p = a_inv.p
    basis = []
    for s_off, a in block_layout(a_inv):
        for t_off, b in block_layout(b_inv):
            shift = max(0, b - a)
            for j in range(min(a, b)):
                A = np.zeros((b_inv.dim, a_inv.dim), dtype=np.int64)
                for col in range(a):
                    row = shift + j + col
                    if row < b:
                        A[t_off + row, s_off + col] = 1
                basis.append(Matrix.from_array(p, A))
    return basis


def _transport(source: ModuleRep, target: ModuleRep, canonical: List[Matrix]) -> List[EquivariantMap]:
    S_source = canonical_model(source)[1].A
    S_target = canonical_model(target)[1].A
    S_source_inv = inverse(S_source)
    return [EquivariantMap(source, target, S_target @ A @ S_source_inv) for A in canonical]


def hom_basis(A: ModuleRep, B: ModuleRep) -> List[EquivariantMap]:
    """循环模 M_a -> M_b 的 Hom 基，共 min(a, b) 个映射"""
    a_inv = _require_cyclic(A)
    b_inv = _require_cyclic(B)
    return _transport(A, B, _canonical_homs(a_inv, b_inv))


def equivariant_basis(A: ModuleRep, B: ModuleRep) -> List[EquivariantMap]:
    """任意模之间 Hom 的基，按块对拼接，维数 Σ min(a_s, b_t)"""
    if A.p != B.p:
        raise InvalidModuleException(f"equivariant_basis: mismatched primes {A.p} and {B.p}")
    return _transport(A, B, _canonical_homs(decompose(A), decompose(B)))


def intertwiner_basis(A: ModuleRep, B: ModuleRep) -> List[EquivariantMap]:
    """
    线性化求 Hom：X·N_A = N_B·X 按列优先 vec 化为
    (N_A^T ⊗ I_b - I_a ⊗ N_B)·vec(X) = 0
    """
    if A.p != B.p:
        raise InvalidModuleException(f"intertwiner_basis: mismatched primes {A.p} and {B.p}")
    p, a, b = A.p, A.dim, B.dim
    if a == 0 or b == 0:
        return []
    system = A.N.T.kron(Matrix.identity(p, b)) - Matrix.identity(p, a).kron(B.N)
    maps = []
    for v in kernel_basis(system):
        X = as_ints(v).reshape(a, b).T
        maps.append(EquivariantMap(A, B, Matrix.from_array(p, X)))
    return maps
