"""
截断多项式 k[T]/T^α 及其求逆
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exactlin import Matrix, prime_field
from ..exceptions.ppdim_exceptions import InvalidModuleException, NotInvertibleException


@dataclass(frozen=True)
class TruncatedPoly:
    """λ_0 + λ_1 T + ... + λ_{α-1} T^{α-1}，系数在 [0, p-1]"""

    p: int
    coefficients: Tuple[int, ...]
    alpha: int

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidModuleException(f"truncation order must be >= 1, got {self.alpha}", p=self.p)
        prime_field(self.p)
        coefficients = [int(c) % self.p for c in self.coefficients[:self.alpha]]
        coefficients += [0] * (self.alpha - len(coefficients))
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def of(cls, p: int, coefficients: Sequence[int], alpha: int = None) -> 'TruncatedPoly':
        return cls(p, tuple(coefficients), alpha if alpha is not None else max(1, len(coefficients)))

    @classmethod
    def one(cls, p: int, alpha: int) -> 'TruncatedPoly':
        return cls(p, (1,), alpha)

    @property
    def constant(self) -> int:
        return self.coefficients[0]

    def is_unit(self) -> bool:
        return self.constant != 0

    def is_one(self) -> bool:
        return self.coefficients == (1,) + (0,) * (self.alpha - 1)

    def __mul__(self, other: 'TruncatedPoly') -> 'TruncatedPoly':
        if (other.p, other.alpha) != (self.p, self.alpha):
            raise InvalidModuleException("multiplying truncated polynomials of different rings", p=self.p)
        product = [0] * self.alpha
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients[:self.alpha - i]):
                product[i + j] = (product[i + j] + a * b) % self.p
        return TruncatedPoly(self.p, tuple(product), self.alpha)

    def evaluate(self, N: Matrix) -> Matrix:
        """Σ λ_i N^i（Horner）"""
        result = Matrix.zeros(self.p, N.rows, N.cols)
        identity = Matrix.identity(self.p, N.rows)
        for c in reversed(self.coefficients):
            result = N @ result + identity.scale(c)
        return result

    def to_list(self) -> List[int]:
        return list(self.coefficients)


def invert_truncated(f: TruncatedPoly) -> TruncatedPoly:
    """
    k[T]/T^α 中的逆元

    从 g = λ_0^{-1} 出发，逐次消去 g·f 的最低次非常数项。
    """
    if not f.is_unit():
        raise NotInvertibleException(f"constant term is 0 in {f.to_list()} (mod T^{f.alpha})")
    field = prime_field(f.p)
    lead_inverse = int(field.inverse(f.constant))
    g = TruncatedPoly(f.p, (lead_inverse,), f.alpha)
    for k in range(1, f.alpha):
        residue = (g * f).coefficients[k]
        if residue == 0:
            continue
        correction = [0] * f.alpha
        correction[k] = residue * lead_inverse
        g = TruncatedPoly(f.p, tuple(a - b for a, b in zip(g.coefficients, correction)), f.alpha)
    return g
