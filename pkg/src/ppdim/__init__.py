"""
ppdim - C_p 上模的置换维数

精确 F_p 线性代数、k[T]/T^p-模的分解、p-距离、构造性置换分解与暴力验证。
"""

__version__ = "1.0.0"
__author__ = "ppdim Team"

from .exactlin import Matrix, prime_field, rank, solve, kernel_basis
from .kmod import (
    Invariants,
    ModuleRep,
    Element,
    EquivariantMap,
    from_invariants,
    decompose,
    depth,
    nilpotency_index,
    generates_summand
)
from .pdist import size_int, size_module, predecessor, group_ppdim, chain_diagram
from .resolve import cover_step, build_resolution, check_exact, is_permutation
from .oracle import SearchBudget, brute_ppdim, search_ppdim, has_split_through_summand, check_prop37
from .exceptions import PpdimException

__all__ = [
    "Matrix",
    "prime_field",
    "rank",
    "solve",
    "kernel_basis",
    "Invariants",
    "ModuleRep",
    "Element",
    "EquivariantMap",
    "from_invariants",
    "decompose",
    "depth",
    "nilpotency_index",
    "generates_summand",
    "size_int",
    "size_module",
    "predecessor",
    "group_ppdim",
    "chain_diagram",
    "cover_step",
    "build_resolution",
    "check_exact",
    "is_permutation",
    "SearchBudget",
    "brute_ppdim",
    "search_ppdim",
    "has_split_through_summand",
    "check_prop37",
    "PpdimException"
]
