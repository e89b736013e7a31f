"""
"把 P 的直和项同构地送到 M 的直和项"的判别

以循环见证形式化：存在非零 u 使 ⟨u⟩ 是 source 的直和项，f 在 ⟨u⟩ 上单（幂零指数不变），
且 ⟨f(u)⟩ 是 target 的直和项。对全部元素做批量求值。
"""

import numpy as np

from ..exactlin import enumerate_vectors
from ..kmod import EquivariantMap, index_profile, summand_profile
from ..utils.logger import get_logger

logger = get_logger('oracle')

DEFAULT_MAX_ELEMENTS = 200000


def split_witnesses(f: EquivariantMap, max_elements: int = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """满足见证条件的 source 元素（按列）的布尔掩码"""
    E = enumerate_vectors(f.p, f.source.dim, limit=max_elements)
    images = f.A @ E
    source_ok = summand_profile(f.source, E)
    if not np.any(source_ok):
        return source_ok
    same_index = index_profile(f.source, E) == index_profile(f.target, images)
    target_ok = summand_profile(f.target, images)
    return source_ok & same_index & target_ok


def has_split_through_summand(f: EquivariantMap, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """
    Raises:
        BudgetExceededException: p^dim(source) 超过 max_elements
    """
    return bool(np.any(split_witnesses(f, max_elements)))
