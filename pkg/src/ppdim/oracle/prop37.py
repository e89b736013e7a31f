"""
核的 size 下界：对不经直和项同构分裂的短正合列 0 -> K -> P -> M -> 0，
size(K) ≥ size(M) - 1，且 M 的每个不变量 c ∉ {1, p} 在 K 中有 c' ∈ {p-c, p-c+1}
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .split import DEFAULT_MAX_ELEMENTS, has_split_through_summand
from ..exactlin import Matrix, inverse, random_invertible
from ..kmod import (
    EquivariantMap,
    Invariants,
    ModuleRep,
    decompose,
    equivariant_basis,
    from_invariants,
    kernel_module
)
from ..pdist import size_module
from ..utils.logger import get_logger, log_execution_time

logger = get_logger('oracle')


@dataclass(frozen=True)
class Prop37Trial:
    index: int
    module: Tuple[int, ...]
    cover: Tuple[int, ...]
    kernel: Tuple[int, ...]
    pairs: Tuple[Tuple[int, Optional[int]], ...]
    inequality_holds: bool
    refinement_holds: bool

    @property
    def ok(self) -> bool:
        return self.inequality_holds and self.refinement_holds

    def to_json(self) -> Dict[str, Any]:
        return {
            "trial": self.index,
            "M": list(self.module),
            "P": list(self.cover),
            "K": list(self.kernel),
            "pairs": [list(pair) for pair in self.pairs],
            "inequality": self.inequality_holds,
            "refinement": self.refinement_holds,
        }


@dataclass
class Prop37Report:
    p: int
    seed: int
    trials: int
    surjections: int = 0
    passed_filter: int = 0
    records: List[Prop37Trial] = field(default_factory=list)
    violations: List[Prop37Trial] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "seed": self.seed,
            "trials": self.trials,
            "surjections": self.surjections,
            "passed_filter": self.passed_filter,
            "violations": [v.to_json() for v in self.violations],
            "records": [r.to_json() for r in self.records],
            "hypothesis": "no nonzero u generating a summand of the source with f injective on <u> "
                          "and <f(u)> a summand of the target",
        }


def random_invariants(p: int, max_dim: int, rng: np.random.Generator) -> Invariants:
    """总维数在 [1, max_dim] 内的随机不变量"""
    remaining = int(rng.integers(1, max_dim + 1))
    parts = []
    while remaining > 0:
        x = int(rng.integers(1, min(p, remaining) + 1))
        parts.append(x)
        remaining -= x
    return Invariants(p, tuple(parts))


def quotient_invariants(cover: Invariants, rng: np.random.Generator) -> Invariants:
    """
    置换模 a·M_p ⊕ b·M_1 的随机商的不变量

    M 是该置换模的商当且仅当 M 中大于 1 的块至多 a 个，且块总数至多 a + b。
    """
    p = cover.p
    a = cover.multiplicity(p)
    big = int(rng.integers(0, a + 1))
    small = int(rng.integers(0 if big else 1, cover.count - big + 1))
    parts = tuple(int(x) for x in rng.integers(2, p + 1, size=big)) + (1,) * small
    return Invariants(p, parts)


def conjugated_model(inv: Invariants, rng: np.random.Generator) -> ModuleRep:
    """规范模型再用随机可逆矩阵共轭"""
    C = from_invariants(inv)
    S = random_invertible(inv.p, C.dim, rng)
    return ModuleRep(inv.p, C.dim, S @ C.N @ inverse(S))


def random_module(p: int, max_dim: int, rng: np.random.Generator) -> ModuleRep:
    return conjugated_model(random_invariants(p, max_dim, rng), rng)


def random_surjection(P: ModuleRep, M: ModuleRep, rng: np.random.Generator,
                      attempts: int = 500) -> Optional[EquivariantMap]:
    """Hom(P, M) 中的随机满射（拒绝采样，M 应为 P 的商）"""
    basis = equivariant_basis(P, M)
    if not basis:
        return None
    for _ in range(attempts):
        coefficients = rng.integers(0, P.p, size=len(basis))
        A = Matrix.zeros(P.p, M.dim, P.dim)
        for c, h in zip(coefficients, basis):
            A = A + h.A.scale(int(c))
        f = EquivariantMap(P, M, A)
        if f.is_surjective():
            return f
    logger.warning(f"No surjection {decompose(P)} -> {decompose(M)} after {attempts} attempts")
    return None


def evaluate_ses(f: EquivariantMap, index: int = 0) -> Prop37Trial:
    """对满射 f 检查不等式与不变量配对"""
    p = f.p
    K, _ = kernel_module(f)
    inv_M, inv_K = decompose(f.target), decompose(K)
    pairs = []
    for c in inv_M.parts:
        if c in (1, p):
            continue
        match = next((c2 for c2 in inv_K.parts if c2 in (p - c, p - c + 1)), None)
        pairs.append((c, match))
    return Prop37Trial(
        index=index,
        module=inv_M.parts,
        cover=decompose(f.source).parts,
        kernel=inv_K.parts,
        pairs=tuple(pairs),
        inequality_holds=size_module(inv_K) >= size_module(inv_M) - 1,
        refinement_holds=all(match is not None for _, match in pairs),
    )


def satisfies_hypothesis(f: EquivariantMap, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """f 与核的包含映射都不经直和项同构分裂"""
    if has_split_through_summand(f, max_elements):
        return False
    _, g = kernel_module(f)
    return g.source.dim == 0 or not has_split_through_summand(g, max_elements)


@log_execution_time(logger)
def check_prop37(p: int, trials: int, seed: int, max_dim: int,
                 max_elements: int = DEFAULT_MAX_ELEMENTS) -> Prop37Report:
    """
    随机置换模 P（dim P ≤ max_dim）、P 的随机商 M 与随机满射 P ↠ M，
    只保留满足假设的短正合列并检查结论；违反被记录而不抛出
    """
    rng = np.random.default_rng(seed)
    report = Prop37Report(p=p, seed=seed, trials=trials)
    for t in range(trials):
        a = int(rng.integers(0, max_dim // p + 1))
        b = int(rng.integers(0 if a else 1, max_dim - a * p + 1))
        cover = Invariants(p, (p,) * a + (1,) * b)
        P = from_invariants(cover)
        M = conjugated_model(quotient_invariants(cover, rng), rng)
        f = random_surjection(P, M, rng)
        if f is None:
            continue
        report.surjections += 1
        if not satisfies_hypothesis(f, max_elements):
            continue
        report.passed_filter += 1
        record = evaluate_ses(f, index=t)
        report.records.append(record)
        if not record.ok:
            logger.error(f"Size bound violated at p={p}, seed={seed}, trial {t}: {record.to_json()}")
            report.violations.append(record)
    logger.info(f"Kernel size check p={p}: {report.surjections} surjections, "
                f"{report.passed_filter} passed the hypothesis, {len(report.violations)} violations")
    return report
