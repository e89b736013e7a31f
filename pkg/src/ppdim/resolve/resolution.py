"""
置换分解：反复做覆盖步并拼接成正合复形

0 -> P_s -> ... -> P_1 -> P_0 -> M -> 0
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .cover import CoverStep, TraceRecord, cover_step, is_permutation
from ..exactlin import rank
from ..exceptions.ppdim_exceptions import DimensionMismatchException, ResolutionException
from ..kmod import EquivariantMap, ModuleRep, decompose, module_to_json
from ..utils.logger import get_logger, log_execution_time

logger = get_logger('resolve')


@dataclass(frozen=True)
class PermResolution:
    """
    terms[i] = P_i，differentials[i-1] = d_i: P_i -> P_{i-1}，augmentation: P_0 -> M
    """

    module: ModuleRep
    terms: Tuple[ModuleRep, ...]
    differentials: Tuple[EquivariantMap, ...]
    augmentation: EquivariantMap
    trace: Tuple[Tuple[TraceRecord, ...], ...] = ()

    def __post_init__(self):
        if len(self.differentials) != max(0, len(self.terms) - 1):
            raise DimensionMismatchException("PermResolution", f"{len(self.terms) - 1} differentials",
                                             len(self.differentials))

    @property
    def p(self) -> int:
        return self.module.p

    @property
    def length(self) -> int:
        return max(0, len(self.terms) - 1)

    def dims(self) -> List[int]:
        return [P.dim for P in self.terms]

    def differential(self, i: int) -> EquivariantMap:
        return self.differentials[i - 1]

    def is_permutation_complex(self) -> bool:
        return all(is_permutation(P) for P in self.terms)

    def trace_records(self) -> List[TraceRecord]:
        return [record for step in self.trace for record in step]


@log_execution_time(logger)
def build_resolution(M: ModuleRep) -> PermResolution:
    """长度等于 size(M) 的置换分解"""
    M.validate()
    if is_permutation(M):
        return PermResolution(M, (M,), (), EquivariantMap.identity(M))

    terms: List[ModuleRep] = []
    differentials: List[EquivariantMap] = []
    trace: List[Tuple[TraceRecord, ...]] = []
    augmentation: Optional[EquivariantMap] = None
    inclusion: Optional[EquivariantMap] = None
    current = M
    limit = max(1, M.p - 2)

    while True:
        step = cover_step(current)
        onto_current = step.iso.compose(step.f)
        if inclusion is None:
            augmentation = onto_current
        else:
            differentials.append(inclusion.compose(onto_current))
        terms.append(step.P)
        trace.append(step.trace)
        if len(terms) > limit:
            raise ResolutionException(f"resolution of {decompose(M)} exceeds p - 2 = {M.p - 2} steps",
                                      step=len(terms))
        inclusion = step.g
        current = step.K
        if current.dim == 0:
            break
        if is_permutation(current):
            terms.append(current)
            differentials.append(inclusion)
            break

    logger.info(f"Resolved {decompose(M)} over F_{M.p}: length {len(terms) - 1}, dims {[P.dim for P in terms]}")
    return PermResolution(M, tuple(terms), tuple(differentials), augmentation, tuple(trace))


def _exact_sequence(dims: Sequence[int], maps: Sequence[EquivariantMap]) -> bool:
    """
    0 -> V_0 -> V_1 -> ... -> V_n -> 0，maps[i]: V_i -> V_{i+1}

    每个位置 rank(入) = dim - rank(出)，且相邻复合为零。
    """
    for i, f in enumerate(maps):
        if f.A.shape != (dims[i + 1], dims[i]):
            raise DimensionMismatchException("exactness check", (dims[i + 1], dims[i]), f.A.shape)
    for first, second in zip(maps, maps[1:]):
        if not (second.A @ first.A).is_zero():
            return False
    ranks = [0] + [rank(f.A) for f in maps] + [0]
    return all(ranks[i] == dims[i] - ranks[i + 1] for i in range(len(dims)))


def check_exact(R: Union[PermResolution, CoverStep]) -> bool:
    """增广复形是否正合（纯秩运算）"""
    if isinstance(R, CoverStep):
        return _exact_sequence([R.K.dim, R.P.dim, R.M.dim], [R.g, R.f])
    maps = list(reversed(R.differentials)) + [R.augmentation]
    dims = [P.dim for P in reversed(R.terms)] + [R.module.dim]
    return _exact_sequence(dims, maps)


def euler_characteristic(R: PermResolution) -> int:
    """Σ (-1)^i dim P_i，正合时等于 dim M"""
    return sum((-1) ** i * P.dim for i, P in enumerate(R.terms))


def resolution_to_json(R: PermResolution, check: Optional[bool] = None) -> Dict[str, Any]:
    """
    分解的 JSON 表示

    trace 按覆盖步顺序列出 [x, ε, x']，只含 x ∉ {1, p} 的不变量；
    置换块 M_1、M_p 由恒等映射覆盖，没有记录。
    """
    doc: Dict[str, Any] = {
        "p": R.p,
        "module": module_to_json(R.module),
        "length": R.length,
        "terms": [decompose(P).as_list() for P in R.terms],
        "dims": R.dims(),
        "differentials": [d.A.to_lists() for d in R.differentials],
        "augmentation": R.augmentation.A.to_lists(),
        "trace": [list(record.as_tuple()) for record in R.trace_records()],
    }
    if check is not None:
        doc["check"] = check
    return doc
