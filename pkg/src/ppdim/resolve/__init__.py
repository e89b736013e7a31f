"""
构造性置换分解：覆盖步、拼接与正合性检验
"""

from .cover import TraceRecord, CoverStep, cover_step, is_permutation
from .resolution import (
    PermResolution,
    build_resolution,
    check_exact,
    euler_characteristic,
    resolution_to_json
)
from .products import direct_sum_resolutions, tensor_resolutions

__all__ = [
    "TraceRecord",
    "CoverStep",
    "cover_step",
    "is_permutation",
    "PermResolution",
    "build_resolution",
    "check_exact",
    "euler_characteristic",
    "resolution_to_json",
    "direct_sum_resolutions",
    "tensor_resolutions"
]
