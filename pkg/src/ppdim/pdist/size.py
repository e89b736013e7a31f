"""
p-距离（size）：x ↦ p-x 或 x ↦ p-x+1 走到 {1, p} 所需的最少步数
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Tuple

from ..exactlin import prime_field
from ..exceptions.ppdim_exceptions import InvalidModuleException
from ..extensions.memo import MemoTable
from ..kmod import Invariants
from ..utils.logger import get_logger

logger = get_logger('pdist')

_tables: MemoTable[int, 'SizeTable'] = MemoTable('size_tables')


@dataclass(frozen=True)
class SizeTable:
    """size(x)，x ∈ [1, p]；values[x - 1] = size(x)"""

    p: int
    values: Tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        if not 1 <= x <= self.p:
            raise InvalidModuleException(f"x = {x} out of range [1, {self.p}]", p=self.p)
        return self.values[x - 1]

    def maximum(self) -> int:
        return max(self.values)

    def as_dict(self) -> Dict[int, int]:
        return {x: self.values[x - 1] for x in range(1, self.p + 1)}


def _build_table(p: int) -> SizeTable:
    """在反向移动图上从 {1, p} 做 BFS"""
    distance = {1: 0, p: 0}
    queue = deque([1, p])
    while queue:
        y = queue.popleft()
        # x 一步走到 y 当且仅当 y ∈ {p-x, p-x+1}
        for x in (p - y, p - y + 1):
            if 2 <= x <= p - 1 and x not in distance:
                distance[x] = distance[y] + 1
                queue.append(x)
    logger.debug(f"Built size table for p={p}")
    return SizeTable(p, tuple(distance[x] for x in range(1, p + 1)))


def size_table(p: int) -> SizeTable:
    prime_field(p)
    return _tables.get_or_compute(p, lambda: _build_table(p))


def size_int(p: int, x: int) -> int:
    return size_table(p)[x]


def size_module(inv: Invariants) -> int:
    """各不变量 size 的最大值；零模为 0"""
    table = size_table(inv.p)
    return max((table[x] for x in inv.parts), default=0)


def predecessor(p: int, x: int) -> Tuple[int, int]:
    """
    (x', ε)：x' ∈ {p-x, p-x+1} 且 size(x') = size(x) - 1，ε = x - p + x'
    """
    if not 2 <= x <= p - 1:
        raise InvalidModuleException(f"x = {x} has no predecessor: it must lie in [2, {p - 1}]", p=p)
    table = size_table(p)
    target = table[x] - 1
    for candidate in (p - x, p - x + 1):
        if table[candidate] == target:
            return candidate, x - p + candidate
    raise InvalidModuleException(f"size table for p={p} has no predecessor of {x}", p=p)


def group_ppdim(p: int) -> int:
    """max_x size(x)：p ≥ 3 时为 p - 2，p = 2 时为 0"""
    return size_table(p).maximum()


def closed_form_size(p: int, x: int) -> int:
    """size(x) = 2(x-1)（x ≤ (p-1)/2），2(p-x)-1（x ≥ (p+1)/2）"""
    prime_field(p)
    if not 1 <= x <= p:
        raise InvalidModuleException(f"x = {x} out of range [1, {p}]", p=p)
    if x in (1, p):
        return 0
    if 2 * x <= p - 1:
        return 2 * (x - 1)
    return 2 * (p - x) - 1
