"""
kC_p-模：表示、分解、等变映射与直和项判别
"""

from .module import (
    Invariants,
    ModuleRep,
    Element,
    block_layout,
    coordinates,
    from_invariants,
    decompose,
    is_canonical,
    direct_sum,
    direct_sum_all,
    tensor
)
from .truncated import TruncatedPoly, invert_truncated
from .maps import (
    EquivariantMap,
    jordan_basis,
    canonical_model,
    kernel_module,
    hom_basis,
    equivariant_basis,
    intertwiner_basis
)
from .summands import (
    INFINITY,
    BULK_INFINITE_DEPTH,
    Depth,
    depth,
    nilpotency_index,
    generates_summand,
    generates_summand_perm,
    layered_depths,
    splits_by_invariants,
    split_projection,
    criteria_agree,
    index_profile,
    depth_profile,
    summand_profile,
    perm_summand_profile
)
from .io import module_to_json, module_from_json, invariants_to_json, integer_rows

__all__ = [
    "Invariants",
    "ModuleRep",
    "Element",
    "block_layout",
    "coordinates",
    "from_invariants",
    "decompose",
    "is_canonical",
    "direct_sum",
    "direct_sum_all",
    "tensor",
    "TruncatedPoly",
    "invert_truncated",
    "EquivariantMap",
    "jordan_basis",
    "canonical_model",
    "kernel_module",
    "hom_basis",
    "equivariant_basis",
    "intertwiner_basis",
    "INFINITY",
    "BULK_INFINITE_DEPTH",
    "Depth",
    "depth",
    "nilpotency_index",
    "generates_summand",
    "generates_summand_perm",
    "layered_depths",
    "splits_by_invariants",
    "split_projection",
    "criteria_agree",
    "index_profile",
    "depth_profile",
    "summand_profile",
    "perm_summand_profile",
    "module_to_json",
    "module_from_json",
    "integer_rows",
    "invariants_to_json"
]
