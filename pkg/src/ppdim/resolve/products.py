"""
分解的直和（逐次数）与张量积（全复形）
"""

from typing import Dict, List, Tuple

import numpy as np

from .resolution import PermResolution
from ..exactlin import Matrix
from ..exceptions.ppdim_exceptions import InvalidModuleException
from ..kmod import EquivariantMap, ModuleRep, direct_sum, direct_sum_all, tensor


def _term(R: PermResolution, i: int) -> ModuleRep:
    return R.terms[i] if i < len(R.terms) else ModuleRep.zero(R.p)


def _differential(R: PermResolution, i: int) -> Matrix:
    """d_i: P_i -> P_{i-1}，超出长度时为零矩阵"""
    if 1 <= i <= R.length:
        return R.differential(i).A
    return Matrix.zeros(R.p, _term(R, i - 1).dim, _term(R, i).dim)


def direct_sum_resolutions(R: PermResolution, S: PermResolution) -> PermResolution:
    """逐次数直和：分解 M ⊕ M'，长度取最大值"""
    if R.p != S.p:
        raise InvalidModuleException(f"direct sum of resolutions over F_{R.p} and F_{S.p}")
    p = R.p
    length = max(R.length, S.length)
    terms = tuple(direct_sum(_term(R, i), _term(S, i)) for i in range(length + 1))
    differentials = tuple(
        EquivariantMap(terms[i], terms[i - 1],
                       Matrix.block_diag(p, [_differential(R, i), _differential(S, i)]))
        for i in range(1, length + 1)
    )
    module = direct_sum(R.module, S.module)
    augmentation = EquivariantMap(terms[0], module,
                                  Matrix.block_diag(p, [R.augmentation.A, S.augmentation.A]))
    steps = max(len(R.trace), len(S.trace))
    trace = tuple(
        (R.trace[i] if i < len(R.trace) else ()) + (S.trace[i] if i < len(S.trace) else ())
        for i in range(steps)
    )
    return PermResolution(module, terms, differentials, augmentation, trace)


def tensor_resolutions(R: PermResolution, S: PermResolution) -> PermResolution:
    """
    全复形 T_n = ⊕_{i+j=n} P_i ⊗ P'_j

    d(a ⊗ b) = d a ⊗ b + (-1)^i a ⊗ d' b，增广为 ε ⊗ ε'。
    """
    if R.p != S.p:
        raise InvalidModuleException(f"tensor of resolutions over F_{R.p} and F_{S.p}")
    p = R.p
    length = R.length + S.length

    def pieces(n: int) -> List[Tuple[int, int]]:
        return [(i, n - i) for i in range(n + 1) if i <= R.length and n - i <= S.length]

    def offsets(n: int) -> Dict[Tuple[int, int], int]:
        table, offset = {}, 0
        for i, j in pieces(n):
            table[(i, j)] = offset
            offset += R.terms[i].dim * S.terms[j].dim
        return table

    terms = tuple(
        direct_sum_all(p, [tensor(R.terms[i], S.terms[j]) for i, j in pieces(n)])
        for n in range(length + 1)
    )

    differentials = []
    for n in range(1, length + 1):
        source_offsets, target_offsets = offsets(n), offsets(n - 1)
        D = np.zeros((terms[n - 1].dim, terms[n].dim), dtype=np.int64)
        for (i, j), col in source_offsets.items():
            width = R.terms[i].dim * S.terms[j].dim
            if i >= 1:
                block = R.differential(i).A.kron(Matrix.identity(p, S.terms[j].dim)).to_numpy()
                row = target_offsets[(i - 1, j)]
                D[row:row + block.shape[0], col:col + width] += block
            if j >= 1:
                block = Matrix.identity(p, R.terms[i].dim).kron(S.differential(j).A).to_numpy()
                row = target_offsets[(i, j - 1)]
                D[row:row + block.shape[0], col:col + width] += (-1) ** i * block
        differentials.append(EquivariantMap(terms[n], terms[n - 1], Matrix.from_array(p, D)))

    module = tensor(R.module, S.module)
    augmentation = EquivariantMap(terms[0], module, R.augmentation.A.kron(S.augmentation.A))
    return PermResolution(module, terms, tuple(differentials), augmentation)
