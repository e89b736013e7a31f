"""
素域上下文 - 每个素数 p 对应一个 galois.GF(p) 类，全局缓存
"""

from dataclasses import dataclass
from typing import Any, Iterable

import galois
import numpy as np

from ..exceptions.ppdim_exceptions import FieldException
from ..extensions.memo import MemoTable
from ..utils.logger import get_logger

logger = get_logger('exactlin')

# FieldElem: 0 维 galois.FieldArray，值位于 [0, p-1]
FieldElem = galois.FieldArray

_field_cache: MemoTable[int, 'PrimeField'] = MemoTable('prime_fields')


@dataclass(frozen=True)
class PrimeField:
    """素域 F_p 的计算上下文"""
    p: int
    GF: Any

    def element(self, value: int) -> FieldElem:
        """构造域元素，整数先约化到 [0, p-1]"""
        return self.GF(int(value) % self.p)

    def array(self, data: Any) -> galois.FieldArray:
        """构造域数组，负数与越界整数先取模"""
        return self.GF(np.mod(as_ints(data), self.p))

    def zeros(self, shape) -> galois.FieldArray:
        return self.GF.Zeros(shape)

    def identity(self, n: int) -> galois.FieldArray:
        return self.GF.Identity(n)

    def inverse(self, value: Any) -> FieldElem:
        """模逆元"""
        value = self.element(int(value))
        if int(value) == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return self.GF(1) / value

    def elements(self) -> Iterable[int]:
        return range(self.p)


def as_ints(data: Any) -> np.ndarray:
    """转为普通 int64 数组"""
    if isinstance(data, galois.FieldArray):
        data = data.view(np.ndarray)
    return np.asarray(data, dtype=np.int64)


def is_prime(p: Any) -> bool:
    """判断是否为素数"""
    return isinstance(p, (int, np.integer)) and not isinstance(p, bool) and p >= 2 and galois.is_prime(int(p))


def prime_field(p: int) -> PrimeField:
    """获取（并缓存）素域上下文，非素数抛出 FieldException"""
    cached = _field_cache.get(p) if isinstance(p, (int, np.integer)) else None
    if cached is not None:
        return cached
    if not is_prime(p):
        raise FieldException(p)
    logger.debug(f"Creating prime field context F_{p}")
    return _field_cache.put_if_absent(int(p), PrimeField(int(p), galois.GF(int(p))))
