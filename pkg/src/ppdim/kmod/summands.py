"""
元素的深度、幂零指数与直和项判别

m ∈ M 生成一个直和项 ⟺ 对 y = N^{α-1} m（α 为 m 的幂零指数）有 depth(y) = α - 1。
批量版本（*_profile）对矩阵的每一列同时求值，供 oracle 穷举使用。
"""

import functools
from typing import Any, List, Optional, Tuple, Union

import numpy as np

from .maps import EquivariantMap, canonical_model
from .module import ModuleRep, block_layout, coordinates, decompose
from .truncated import TruncatedPoly, invert_truncated
from ..exactlin import Matrix, as_ints, inverse, left_kernel_matrix, rank, solve
from ..exceptions.ppdim_exceptions import (
    InvalidModuleException,
    NotPermutationException,
    PpdimException,
    ZeroElementException
)


@functools.total_ordering
class _Infinity:
    """零元素的深度：大于任何整数"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: Any) -> bool:
        return other is self

    def __lt__(self, other: Any) -> bool:
        return False

    def __gt__(self, other: Any) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash('ppdim.infinity')

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "∞"


INFINITY = _Infinity()
Depth = Union[int, _Infinity]

# 批量 profile 中零列的深度
BULK_INFINITE_DEPTH = -1


def depth(M: ModuleRep, m: Any) -> Depth:
    """最大的 i ≤ p 使 m ∈ N^i·M；m = 0 时为 INFINITY"""
    v = coordinates(M, m)
    if not np.any(as_ints(v)):
        return INFINITY
    for i in range(M.p, 0, -1):
        if solve(M.power(i), v) is not None:
            return i
    return 0


def nilpotency_index(M: ModuleRep, m: Any) -> int:
    """最小的 α ≥ 0 使 N^α·m = 0"""
    v = coordinates(M, m)
    for alpha in range(M.p + 1):
        if not np.any(as_ints(v)):
            return alpha
        v = M.N @ v
    raise InvalidModuleException("N^p m != 0: not a k[T]/T^p module", p=M.p)


def generates_summand(M: ModuleRep, m: Any) -> bool:
    """⟨m⟩ 是否为 M 的直和项"""
    v = coordinates(M, m)
    if not np.any(as_ints(v)):
        raise ZeroElementException("generates_summand")
    alpha = nilpotency_index(M, v)
    top = M.power(alpha - 1) @ v
    return depth(M, top) == alpha - 1


def generates_summand_perm(P: ModuleRep, m: Any) -> bool:
    """置换模上的判别：depth(Tm) = 1，或 depth(m) = 0 且 Tm = 0"""
    inv = decompose(P)
    if not inv.is_permutation():
        raise NotPermutationException(inv.as_list())
    v = coordinates(P, m)
    if not np.any(as_ints(v)):
        raise ZeroElementException("generates_summand_perm")
    if depth(P, P.N @ v) == 1:
        return True
    return depth(P, v) == 0 and nilpotency_index(P, v) == 1


def layered_depths(M: ModuleRep, m: Any) -> bool:
    """depth(N^i m) = i 对所有 i < α 成立"""
    v = coordinates(M, m)
    alpha = nilpotency_index(M, v)
    for i in range(alpha):
        if depth(M, v) != i:
            return False
        v = M.N @ v
    return True


def _submodule_ranks(M: ModuleRep, generator: Any) -> Matrix:
    v = coordinates(M, generator)
    columns = []
    for _ in range(nilpotency_index(M, v)):
        columns.append(v)
        v = M.N @ v
    return Matrix.from_columns(M.p, columns, M.dim)


def splits_by_invariants(M: ModuleRep, m: Any) -> bool:
    """
    以不变量判别：inv(M) = {α} ⊎ inv(M/⟨m⟩) 时短正合列可裂

    商模的秩：rank(N^i on M/U) = dim(N^i M + U) - dim U。
    """
    v = coordinates(M, m)
    if not np.any(as_ints(v)):
        raise ZeroElementException("splits_by_invariants")
    U = _submodule_ranks(M, v)
    alpha = U.cols
    ranks = [M.dim - alpha]
    for i in range(1, M.p + 2):
        combined = Matrix.hstack(M.p, [M.power(i), U], rows=M.dim)
        ranks.append(rank(combined) - alpha)
    parts: List[int] = []
    for i in range(1, M.p + 1):
        parts.extend([i] * (ranks[i - 1] - 2 * ranks[i] + ranks[i + 1]))
    return sorted(parts + [alpha], reverse=True) == decompose(M).as_list()


def split_projection(M: ModuleRep, m: Any) -> Optional[EquivariantMap]:
    """
    等变投影 π: M -> ⟨m⟩，π(m) = m 且 π² = π；⟨m⟩ 不是直和项时返回 None

    在规范模型中 m = Σ f_i(N) e_i，取块大小为 α 且 f_i 常数项非零的块 i0，
    g = f_{i0}^{-1} (mod T^α)，Φ(e_{i0}) = g(N)·m，其余块送到 0。
    """
    v = coordinates(M, m)
    if not np.any(as_ints(v)):
        raise ZeroElementException("split_projection")
    alpha = nilpotency_index(M, v)
    C, iso = canonical_model(M)
    S = iso.A
    S_inv = inverse(S)
    c = as_ints(S_inv @ v)

    chosen = None
    for offset, size in block_layout(decompose(M)):
        if size == alpha and c[offset] % M.p != 0:
            chosen = offset
            break
    if chosen is None:
        return None

    f = TruncatedPoly(M.p, tuple(int(x) for x in c[chosen:chosen + alpha]), alpha)
    g = invert_truncated(f)
    image = as_ints(g.evaluate(C.N) @ c)
    phi = np.zeros((C.dim, C.dim), dtype=np.int64)
    column = image
    for j in range(alpha):
        phi[:, chosen + j] = column
        column = as_ints(C.N @ column)
    pi = EquivariantMap(M, M, S @ Matrix.from_array(M.p, phi) @ S_inv)

    if not (pi.A @ pi.A) == pi.A or not np.array_equal(as_ints(pi.A @ v), as_ints(v)):
        raise PpdimException(f"split projection for {as_ints(v).tolist()} is not an idempotent retraction")
    return pi


def criteria_agree(M: ModuleRep, m: Any) -> Tuple[bool, bool, bool]:
    """(投影存在, 逐层深度, 顶部深度) 三个判别的取值"""
    return (split_projection(M, m) is not None,
            layered_depths(M, m),
            generates_summand(M, m))


# ---- 批量 profile：E 的每一列是一个元素 ----

def index_profile(M: ModuleRep, E: Matrix) -> np.ndarray:
    """每列的幂零指数"""
    result = np.full(E.cols, -1, dtype=np.int64)
    current = E
    for i in range(M.p + 1):
        zero = ~np.any(current.to_numpy(), axis=0)
        result[(result < 0) & zero] = i
        if np.all(result >= 0):
            break
        current = M.N @ current
    return result


def depth_profile(M: ModuleRep, E: Matrix) -> np.ndarray:
    """每列的深度；零列记为 BULK_INFINITE_DEPTH"""
    values = E.to_numpy()
    result = np.zeros(E.cols, dtype=np.int64)
    for i in range(1, M.p):
        annihilator = left_kernel_matrix(M.power(i))
        if annihilator.rows == 0:
            member = np.ones(E.cols, dtype=bool)
        else:
            member = ~np.any((annihilator @ E).to_numpy(), axis=0)
        if not np.any(member):
            break
        result += member
    result[~np.any(values, axis=0)] = BULK_INFINITE_DEPTH
    return result


def summand_profile(M: ModuleRep, E: Matrix) -> np.ndarray:
    """每列是否生成直和项；零列为 False"""
    index = index_profile(M, E)
    if E.cols == 0:
        return np.zeros(0, dtype=bool)
    powers = [E.to_numpy()]
    for _ in range(1, max(1, int(index.max()))):
        powers.append(as_ints((M.N @ Matrix.from_array(M.p, powers[-1])).data))
    tops = np.zeros_like(powers[0])
    nonzero = index >= 1
    for col in np.flatnonzero(nonzero):
        tops[:, col] = powers[index[col] - 1][:, col]
    top_depth = depth_profile(M, Matrix.from_array(M.p, tops))
    return nonzero & (top_depth == index - 1)


def perm_summand_profile(P: ModuleRep, E: Matrix) -> np.ndarray:
    """置换模上的批量判别（depth(Tm) = 1，或 depth(m) = 0 且 Tm = 0）"""
    index = index_profile(P, E)
    own = depth_profile(P, E)
    shifted = depth_profile(P, P.N @ E)
    nonzero = index >= 1
    return nonzero & ((shifted == 1) | ((own == 0) & (index == 1)))
