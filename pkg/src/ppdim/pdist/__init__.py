"""
p-距离函数、前驱选择与 size 链
"""

from .size import (
    SizeTable,
    size_table,
    size_int,
    size_module,
    predecessor,
    group_ppdim,
    closed_form_size
)
from .chain import ChainDiagram, chain_diagram

__all__ = [
    "SizeTable",
    "size_table",
    "size_int",
    "size_module",
    "predecessor",
    "group_ppdim",
    "closed_form_size",
    "ChainDiagram",
    "chain_diagram"
]
