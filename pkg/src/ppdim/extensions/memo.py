"""
记忆化表 - 线程安全的 LRU 缓存，供尺寸表、规范模型和预言机搜索共享
"""

import threading
from collections import OrderedDict
from typing import Callable, Dict, Generic, Hashable, Optional, TypeVar

K = TypeVar('K', bound=Hashable)
V = TypeVar('V')


class MemoTable(Generic[K, V]):
    """线程安全的记忆化表"""

    def __init__(self, name: str, max_size: Optional[int] = None):
        self.name = name
        self.max_size = max_size

        # OrderedDict 实现 LRU
        self._table: 'OrderedDict[K, V]' = OrderedDict()

        self._stats = {
            'hits': 0,
            'misses': 0,
            'evictions': 0,
            'inserts': 0
        }

        self._lock = threading.RLock()

    def get(self, key: K) -> Optional[V]:
        """读取缓存值，不存在返回 None"""
        with self._lock:
            if key not in self._table:
                self._stats['misses'] += 1
                return None
            self._table.move_to_end(key)
            self._stats['hits'] += 1
            return self._table[key]

    def put_if_absent(self, key: K, value: V) -> V:
        """原子地插入，若已存在则返回已有值"""
        with self._lock:
            if key in self._table:
                self._stats['hits'] += 1
                return self._table[key]
            self._table[key] = value
            self._stats['inserts'] += 1
            self._evict()
            return value

    def update(self, key: K, func: Callable[[Optional[V]], V]) -> V:
        """原子地读-改-写"""
        with self._lock:
            new_value = func(self._table.get(key))
            self._table[key] = new_value
            self._table.move_to_end(key)
            self._evict()
            return new_value

    def get_or_compute(self, key: K, factory: Callable[[], V]) -> V:
        """读取缓存值，不存在时计算并插入

        计算在锁外进行，并发时只保留第一个写入的结果。
        """
        cached = self.get(key)
        if cached is not None:
            return cached
        return self.put_if_absent(key, factory())

    def _evict(self) -> None:
        if self.max_size is None:
            return
        while len(self._table) > self.max_size:
            self._table.popitem(last=False)
            self._stats['evictions'] += 1

    def clear(self) -> None:
        """清空缓存"""
        with self._lock:
            self._table.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._table)

    def get_stats(self) -> Dict[str, int]:
        """获取统计信息"""
        with self._lock:
            stats = dict(self._stats)
            stats['size'] = len(self._table)
            total = stats['hits'] + stats['misses']
            stats['hit_rate'] = round(stats['hits'] / total, 4) if total else 0.0
            return stats
