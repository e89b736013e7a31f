"""
F_p 上的精确稠密线性代数
"""

from .field import FieldElem, PrimeField, as_ints, is_prime, prime_field
from .matrix import Matrix, Vector
from .linalg import (
    row_echelon,
    rank,
    solve,
    kernel_basis,
    kernel_matrix,
    left_kernel_matrix,
    inverse,
    random_matrix,
    random_invertible,
    enumerate_vectors
)

__all__ = [
    "FieldElem",
    "PrimeField",
    "as_ints",
    "is_prime",
    "prime_field",
    "Matrix",
    "Vector",
    "row_echelon",
    "rank",
    "solve",
    "kernel_basis",
    "kernel_matrix",
    "left_kernel_matrix",
    "inverse",
    "random_matrix",
    "random_invertible",
    "enumerate_vectors"
]
