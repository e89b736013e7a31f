"""
覆盖步：置换模 P ↠ M，核 K 的每个不变量是 M 对应不变量的前驱
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..exactlin import Matrix, as_ints
from ..exceptions.ppdim_exceptions import ResolutionException
from ..kmod import (
    EquivariantMap,
    Invariants,
    ModuleRep,
    block_layout,
    canonical_model,
    decompose,
    from_invariants,
    kernel_module
)
from ..pdist import predecessor
from ..utils.logger import get_logger

logger = get_logger('resolve')


@dataclass(frozen=True)
class TraceRecord:
    """x = p + ε - x'"""

    x: int
    epsilon: int
    x_prime: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.x, self.epsilon, self.x_prime


@dataclass(frozen=True)
class CoverStep:
    """
    0 -> K --g--> P --f--> M -> 0

    M 为规范模型，iso: M -> 原始输入模；trace 只记录 x ∉ {1, p} 的不变量。
    """

    M: ModuleRep
    P: ModuleRep
    f: EquivariantMap
    K: ModuleRep
    g: EquivariantMap
    trace: Tuple[TraceRecord, ...]
    iso: EquivariantMap

    @property
    def p(self) -> int:
        return self.M.p


def is_permutation(M: ModuleRep) -> bool:
    """不变量都在 {1, p} 中"""
    return decompose(M).is_permutation()


def cover_step(M: ModuleRep) -> CoverStep:
    C, iso = canonical_model(M)
    p = C.p
    inv = decompose(C)

    # (生成元在 C 中的像, 块大小)：M_p 块在前，M_1 块在后
    free_images: List[np.ndarray] = []
    trivial_images: List[np.ndarray] = []
    trace: List[TraceRecord] = []
    kernel_parts: List[int] = []
    for offset, x in block_layout(inv):
        generator = np.zeros(C.dim, dtype=np.int64)
        generator[offset] = 1
        if x == p:
            free_images.append(generator)
        elif x == 1:
            trivial_images.append(generator)
        else:
            x_prime, epsilon = predecessor(p, x)
            free_images.append(generator)
            if epsilon == 1:
                socle = np.zeros(C.dim, dtype=np.int64)
                socle[offset + x - 1] = 1
                trivial_images.append(socle)
            trace.append(TraceRecord(x, epsilon, x_prime))
            kernel_parts.append(x_prime)

    P = from_invariants(Invariants(p, (p,) * len(free_images) + (1,) * len(trivial_images)))
    F = np.zeros((C.dim, P.dim), dtype=np.int64)
    column = 0
    for u in free_images:
        image = u
        for _ in range(p):
            F[:, column] = image
            image = as_ints(C.N @ image)
            column += 1
    for v in trivial_images:
        F[:, column] = v
        column += 1
    f = EquivariantMap(P, C, Matrix.from_array(p, F))

    K, g = kernel_module(f)
    expected = Invariants(p, tuple(kernel_parts))
    actual = decompose(K)
    if actual != expected:
        raise ResolutionException(f"kernel invariants {actual} differ from predicted {expected}")
    logger.debug(f"Cover step for {inv}: P = {decompose(P)}, K = {actual}")
    return CoverStep(C, P, f, K, g, tuple(trace), iso)
