"""
ppdim 异常系统
"""

from .ppdim_exceptions import (
    PpdimException,
    FieldException,
    DimensionMismatchException,
    InvalidModuleException,
    NotEquivariantException,
    ZeroElementException,
    NotCyclicException,
    NotPermutationException,
    NotInvertibleException,
    ResolutionException,
    BudgetExceededException,
    ConfigurationException,
    InputException
)

__all__ = [
    "PpdimException",
    "FieldException",
    "DimensionMismatchException",
    "InvalidModuleException",
    "NotEquivariantException",
    "ZeroElementException",
    "NotCyclicException",
    "NotPermutationException",
    "NotInvertibleException",
    "ResolutionException",
    "BudgetExceededException",
    "ConfigurationException",
    "InputException"
]
