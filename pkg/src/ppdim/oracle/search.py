"""
最小置换分解长度的暴力搜索（迭代加深 + 记忆化）

结点为核的不变量多重集。对结点 M 枚举覆盖 P = a·M_p ⊕ b·M_1 ↠ M：
映射由生成元的像 (u_1..u_a; v_1..v_b) 决定，u_i ∈ M 任意，v_j ∈ soc(M)。
核的同构类在 Aut(P) 轨道上不变，因此只枚举
  - u 的多重集，每个 u 取 k^×·u + T⟨u⟩ 中的规范代表元；
  - v 张成的子空间 V ⊆ soc(M)（RREF 基）与零列个数。
生成元在 M/TM 中的像不满秩时不可能是满射，直接剪枝。
"""

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .budget import (
    CERTIFIED,
    CERTIFIED_WITHIN_BUDGET,
    EXHAUSTED,
    UPPER_BOUND,
    SearchBudget,
    SearchResult
)
from ..exactlin import (
    Matrix,
    as_ints,
    enumerate_vectors,
    kernel_matrix,
    left_kernel_matrix,
    prime_field,
    rank,
    row_echelon
)
from ..exceptions.ppdim_exceptions import BudgetExceededException
from ..extensions.memo import MemoTable
from ..kmod import Invariants, ModuleRep, decompose, from_invariants
from ..utils.logger import get_logger, log_execution_time

logger = get_logger('oracle')


@dataclass(frozen=True)
class _Node:
    """规范模型 M 上枚举所需的预计算数据"""

    module: ModuleRep
    top: np.ndarray            # ℓ × n，核为 TM
    generators: Tuple[np.ndarray, ...]   # 规范代表元
    krylov: Tuple[np.ndarray, ...]       # n × p：u, Nu, ..., N^{p-1}u
    generator_tops: Tuple[np.ndarray, ...]
    socle: np.ndarray          # n × s

    @property
    def top_rank(self) -> int:
        return self.top.shape[0]


_nodes: MemoTable[Invariants, _Node] = MemoTable('oracle_nodes')
_kernels: MemoTable[Tuple[Invariants, SearchBudget], Tuple[Invariants, ...]] = MemoTable('oracle_kernels')
# (最大的不可行长度, 最小的可行长度)
_bounds: MemoTable[Tuple[Invariants, SearchBudget], Tuple[int, Optional[int]]] = MemoTable('oracle_bounds')


def clear_search_caches() -> None:
    for table in (_nodes, _kernels, _bounds):
        table.clear()


def _rank_of(p: int, array: np.ndarray) -> int:
    if array.size == 0:
        return 0
    return rank(Matrix.from_array(p, array))


def canonical_generator(M: ModuleRep, u: np.ndarray) -> np.ndarray:
    """
    k^×·u + T⟨u⟩ 的规范代表元：模 span(Nu, N²u, ...) 约化后首个非零坐标归一
    """
    p = M.p
    v = np.mod(as_ints(u), p)
    shifts = []
    w = as_ints(M.N @ v)
    while np.any(w):
        shifts.append(w)
        w = as_ints(M.N @ w)
    if shifts:
        R, pivots = row_echelon(Matrix.from_rows(p, shifts))
        rows = R.to_numpy()
        for row, col in pivots:
            v = np.mod(v - v[col] * rows[row], p)
    nonzero = np.flatnonzero(v)
    if nonzero.size:
        v = np.mod(v * int(prime_field(p).inverse(v[nonzero[0]])), p)
    return v


def _build_node(inv: Invariants, budget: SearchBudget) -> _Node:
    M = from_invariants(inv)
    p, n = M.p, M.dim
    E = enumerate_vectors(p, n, limit=budget.max_elements).to_numpy()
    seen: Dict[Tuple[int, ...], np.ndarray] = {}
    for j in range(E.shape[1]):
        rep = canonical_generator(M, E[:, j])
        seen.setdefault(tuple(int(x) for x in rep), rep)

    top = left_kernel_matrix(M.N).to_numpy() if n else np.zeros((0, 0), dtype=np.int64)

    def index_of(v: np.ndarray) -> int:
        alpha = 0
        while np.any(v):
            v = as_ints(M.N @ v)
            alpha += 1
        return alpha

    # 幂零指数大的在前，便于尽早满射
    ordered = sorted(seen.items(), key=lambda item: (-index_of(item[1]), item[0]))
    generators = tuple(rep for _, rep in ordered)
    krylov = []
    for rep in generators:
        block = np.zeros((n, p), dtype=np.int64)
        v = rep
        for j in range(p):
            block[:, j] = v
            v = as_ints(M.N @ v)
        krylov.append(block)
    generator_tops = tuple(np.mod(top @ rep, p) for rep in generators)
    socle = kernel_matrix(M.N).to_numpy() if n else np.zeros((0, 0), dtype=np.int64)
    logger.debug(f"Oracle node {inv}: {len(generators)} generator classes, socle dim {socle.shape[1]}")
    return _Node(M, top, generators, tuple(krylov), generator_tops, socle)


def _node(inv: Invariants, budget: SearchBudget) -> _Node:
    return _nodes.get_or_compute(inv, lambda: _build_node(inv, budget))


def _subspaces(p: int, s: int, r: int) -> Iterator[np.ndarray]:
    """F_p^s 中全部 r 维子空间，以 r × s 的 RREF 矩阵给出"""
    for pivots in itertools.combinations(range(s), r):
        pivot_set = set(pivots)
        free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, s) if c not in pivot_set]
        for values in itertools.product(range(p), repeat=len(free)):
            B = np.zeros((r, s), dtype=np.int64)
            for i, pc in enumerate(pivots):
                B[i, pc] = 1
            for (i, c), x in zip(free, values):
                B[i, c] = x
            yield B


def _kernel_invariants(p: int, F: np.ndarray, P: ModuleRep) -> Invariants:
    """由 rank(N_P^i·B) 得到 ker F 的不变量，B 为核的基"""
    B = kernel_matrix(Matrix.from_array(p, F))
    k = B.cols
    if k == 0:
        return Invariants(p, ())
    ranks = [k] + [rank(P.power(i) @ B) for i in range(1, p + 2)]
    parts: List[int] = []
    for i in range(1, p + 1):
        parts.extend([i] * (ranks[i - 1] - 2 * ranks[i] + ranks[i + 1]))
    return Invariants(p, tuple(parts))


def _generator_multisets(node: _Node, a: int, needed: int, base_tops: np.ndarray) -> Iterator[Tuple[int, ...]]:
    """a 个代表元的多重集（下标不减），保证顶部像满秩可达"""
    p = node.module.p
    count = len(node.generators)

    def extend(chosen: Tuple[int, ...], start: int, tops: np.ndarray, current_rank: int):
        remaining = a - len(chosen)
        if current_rank + remaining < needed:
            return
        if remaining == 0:
            yield chosen
            return
        for idx in range(start, count):
            extended = np.column_stack([tops, node.generator_tops[idx]]) if tops.size else \
                node.generator_tops[idx].reshape(-1, 1)
            yield from extend(chosen + (idx,), idx, extended, _rank_of(p, extended))

    yield from extend((), 0, base_tops, _rank_of(p, base_tops))


def _enumerate_kernels(inv: Invariants, budget: SearchBudget) -> Iterator[Invariants]:
    """按 dim P 升序给出满射覆盖的核（可能重复）"""
    node = _node(inv, budget)
    M = node.module
    p, n, ell = M.p, M.dim, node.top_rank
    s = node.socle.shape[1]
    socle_top_rank = _rank_of(p, np.mod(node.top @ node.socle, p)) if s else 0
    max_a = min(budget.max_p_copies, ell)
    max_b = min(budget.max_1_copies, ell)

    shapes = sorted(((a, b) for a in range(max_a + 1) for b in range(max_b + 1)),
                    key=lambda ab: (ab[0] * p + ab[1], ab[0]))
    cores: Dict[Tuple[Tuple[int, ...], bytes], Invariants] = {}
    covers: Dict[Tuple[int, int], ModuleRep] = {}
    for a, b in shapes:
        if a * p + b < n or a + min(b, socle_top_rank) < ell:
            continue
        for r in range(min(b, s) + 1):
            for coefficients in _subspaces(p, s, r):
                V = np.mod(node.socle @ coefficients.T, p) if r else np.zeros((n, 0), dtype=np.int64)
                V_tops = np.mod(node.top @ V, p) if r else np.zeros((ell, 0), dtype=np.int64)
                if a + _rank_of(p, V_tops) < ell:
                    continue
                for chosen in _generator_multisets(node, a, ell, V_tops):
                    key = (chosen, V.tobytes())
                    core = cores.get(key)
                    if core is None:
                        F = np.hstack([node.krylov[i] for i in chosen] + [V]) if chosen else V
                        P_core = covers.get((a, r))
                        if P_core is None:
                            P_core = covers[(a, r)] = from_invariants(Invariants(p, (p,) * a + (1,) * r))
                        core = _kernel_invariants(p, F, P_core)
                        cores[key] = core
                    yield core.union(Invariants(p, (1,) * (b - r)))
        logger.debug(f"Oracle node {inv}: covers with a={a}, b={b} enumerated ({a * p + b}-dimensional P)")


def cover_kernels(inv: Invariants, budget: Optional[SearchBudget] = None) -> Iterator[Invariants]:
    """
    预算内全部覆盖核的同构类（去重、按维数升序）

    完整遍历后结果进入缓存；提前停止时不缓存。
    """
    budget = budget or SearchBudget()
    key = (inv, budget)
    cached = _kernels.get(key)
    if cached is not None:
        yield from cached
        return
    found: List[Invariants] = []
    seen = set()
    for K in _enumerate_kernels(inv, budget):
        if K in seen:
            continue
        seen.add(K)
        found.append(K)
        yield K
    _kernels.put_if_absent(key, tuple(found))


class PpdimSearch:
    """
    迭代加深：feasible(inv, d) 表示存在长度 ≤ d 的置换分解

    可行性以 (最大不可行 d, 最小可行 d) 的形式按不变量记忆。
    """

    def __init__(self, budget: Optional[SearchBudget] = None, jobs: int = 1):
        self.budget = budget or SearchBudget()
        self.jobs = max(1, int(jobs))
        self._lock = threading.Lock()
        self.nodes_expanded = 0
        self.skipped_branches = 0

    def _count(self, expanded: int = 0, skipped: int = 0) -> None:
        with self._lock:
            self.nodes_expanded += expanded
            self.skipped_branches += skipped

    def _known(self, inv: Invariants, d: int) -> Optional[bool]:
        bounds = _bounds.get((inv, self.budget))
        if bounds is None:
            return None
        infeasible_max, feasible_min = bounds
        if feasible_min is not None and d >= feasible_min:
            return True
        if d <= infeasible_max:
            return False
        return None

    def _record(self, inv: Invariants, d: int, feasible: bool) -> None:
        def merge(bounds):
            infeasible_max, feasible_min = bounds or (-1, None)
            if feasible:
                feasible_min = d if feasible_min is None else min(feasible_min, d)
            else:
                infeasible_max = max(infeasible_max, d)
            return infeasible_max, feasible_min

        _bounds.update((inv, self.budget), merge)

    def feasible(self, inv: Invariants, d: int) -> Tuple[bool, bool]:
        """
        Returns:
            (是否可行, 结论是否完整)；因预算跳过分支时不完整的否定结论不被记忆
        """
        if inv.is_permutation():
            return True, True
        if d <= 0:
            return False, True
        known = self._known(inv, d)
        if known is not None:
            return known, True

        self._count(expanded=1)
        complete = True
        try:
            for K in cover_kernels(inv, self.budget):
                ok, child_complete = self.feasible(K, d - 1)
                complete = complete and child_complete
                if ok:
                    self._record(inv, d, True)
                    return True, True
        except BudgetExceededException as e:
            logger.debug(f"Skipping node {inv}: {e}")
            self._count(skipped=1)
            return False, False
        if complete:
            self._record(inv, d, False)
        return False, complete

    def _feasible_parallel(self, inv: Invariants, d: int) -> Tuple[bool, bool]:
        """根结点的各分支并发求值，每批 jobs 个，任一可行即停"""
        if self.jobs == 1 or inv.is_permutation() or d <= 0:
            return self.feasible(inv, d)
        known = self._known(inv, d)
        if known is not None:
            return known, True
        self._count(expanded=1)
        complete = True
        try:
            kernels = cover_kernels(inv, self.budget)
            with ThreadPoolExecutor(max_workers=self.jobs) as executor:
                while True:
                    batch = list(itertools.islice(kernels, self.jobs))
                    if not batch:
                        break
                    results = list(executor.map(lambda K: self.feasible(K, d - 1), batch))
                    complete = complete and all(c for _, c in results)
                    if any(ok for ok, _ in results):
                        self._record(inv, d, True)
                        return True, True
        except BudgetExceededException as e:
            logger.debug(f"Skipping root {inv}: {e}")
            self._count(skipped=1)
            return False, False
        if complete:
            self._record(inv, d, False)
        return False, complete

    @staticmethod
    def _log_memo_stats() -> None:
        for table in (_nodes, _kernels, _bounds):
            logger.debug(f"Memo {table.name}: {table.get_stats()}")

    def search(self, M: ModuleRep) -> SearchResult:
        inv = decompose(M)
        refuted = True
        for d in range(self.budget.max_depth + 1):
            ok, complete = self._feasible_parallel(inv, d)
            if ok:
                if d <= 1:
                    label = CERTIFIED
                else:
                    label = CERTIFIED_WITHIN_BUDGET if refuted else UPPER_BOUND
                logger.info(f"Oracle: ppdim{inv} = {d} ({label}, {self.nodes_expanded} nodes)")
                self._log_memo_stats()
                return SearchResult(d, label, self.budget, self.nodes_expanded, self.skipped_branches)
            refuted = refuted and complete
        self._log_memo_stats()
        logger.warning(f"Oracle: no resolution of length <= {self.budget.max_depth} found for {inv}")
        return SearchResult(None, EXHAUSTED, self.budget, self.nodes_expanded, self.skipped_branches)


@log_execution_time(logger)
def search_ppdim(M: ModuleRep, budget: Optional[SearchBudget] = None, jobs: int = 1) -> SearchResult:
    return PpdimSearch(budget, jobs).search(M)


def brute_ppdim(M: ModuleRep, budget: Optional[SearchBudget] = None, jobs: int = 1) -> int:
    """
    Raises:
        BudgetExceededException: 预算内没有找到任何分解
    """
    result = search_ppdim(M, budget, jobs)
    if result.value is None:
        raise BudgetExceededException(f"no permutation resolution of length <= {result.budget.max_depth} "
                                      f"found for {decompose(M)}", budget=result.budget.to_json())
    return result.value
