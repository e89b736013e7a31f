"""
性质验证套件

每个套件返回 SuiteReport，失败被记录而不抛出。
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

import galois
import numpy as np

from .budget import SearchBudget
from .prop37 import check_prop37, random_invariants
from .search import PpdimSearch
from .split import has_split_through_summand
from ..exactlin import Matrix, enumerate_vectors
from ..exceptions.ppdim_exceptions import InputException
from ..kmod import (
    Invariants,
    decompose,
    depth_profile,
    from_invariants,
    index_profile,
    perm_summand_profile,
    split_projection,
    summand_profile,
    tensor
)
from ..pdist import (
    chain_diagram,
    closed_form_size,
    group_ppdim,
    size_int,
    size_module,
    size_table
)
from ..resolve import (
    build_resolution,
    check_exact,
    cover_step,
    direct_sum_resolutions,
    euler_characteristic,
    tensor_resolutions
)
from ..utils.logger import PerformanceMonitor, get_logger, log_execution_time

logger = get_logger('oracle')

MAX_RECORDED_FAILURES = 20


@dataclass
class SuiteReport:
    name: str
    seed: Optional[int] = None
    checked: int = 0
    failure_count: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, condition: bool, **witness: Any) -> bool:
        self.checked += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(witness)
        return condition

    def to_json(self, include_timings: bool = False) -> Dict[str, Any]:
        doc = {
            "suite": self.name,
            "seed": self.seed,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failure_count,
            "failure_records": self.failures,
            "details": self.details,
        }
        if include_timings:
            doc["timings"] = self.timings
        return doc


def reports_to_markdown(reports: Sequence[SuiteReport]) -> str:
    lines = ["| suite | seed | checked | failures | status |", "|---|---|---|---|---|"]
    for report in reports:
        status = "ok" if report.ok else "FAILED"
        seed = "" if report.seed is None else str(report.seed)
        lines.append(f"| {report.name} | {seed} | {report.checked} | {report.failure_count} | {status} |")
    return "\n".join(lines) + "\n"


def all_invariants(p: int, max_dim: int, min_dim: int = 1) -> Iterator[Invariants]:
    """总维数在 [min_dim, max_dim] 内、块大小 ≤ p 的全部不变量"""

    def partitions(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for x in range(min(largest, remaining), 0, -1):
            for rest in partitions(remaining - x, x):
                yield (x,) + rest

    for dim in range(min_dim, max_dim + 1):
        for parts in partitions(dim, p):
            yield Invariants(p, parts)


def _nonzero_elements(p: int, n: int) -> Matrix:
    E = enumerate_vectors(p, n)
    return E.submatrix(range(n), range(1, E.cols))


def lemma34(primes: Sequence[int] = (2, 3, 5), max_dim: int = 5) -> SuiteReport:
    """
    直和项判别的三种形式逐元素一致：
    (1) 等变投影存在 (2) 各层深度 depth(T^i m) = i (3) 顶部深度
    """
    report = SuiteReport("lemma34")
    for p in primes:
        for inv in all_invariants(p, max_dim):
            M = from_invariants(inv)
            E = _nonzero_elements(p, M.dim)
            index = index_profile(M, E)
            top = summand_profile(M, E)
            layered = np.ones(E.cols, dtype=bool)
            current = E
            for i in range(p):
                active = index > i
                layered &= ~active | (depth_profile(M, current) == i)
                current = M.N @ current
            for j in range(E.cols):
                element = E.column(j)
                projected = split_projection(M, element) is not None
                agree = projected == bool(layered[j]) == bool(top[j])
                report.check(agree, p=p, invariants=inv.as_list(), element=[int(v) for v in element],
                             criteria=[projected, bool(layered[j]), bool(top[j])])
    return report


def lemma35(primes: Sequence[int] = (2, 3, 5), max_dim: int = 6) -> SuiteReport:
    """置换模上两种直和项判别一致"""
    report = SuiteReport("lemma35")
    for p in primes:
        for inv in all_invariants(p, max_dim):
            if not inv.is_permutation():
                continue
            P = from_invariants(inv)
            E = _nonzero_elements(p, P.dim)
            general = summand_profile(P, E)
            permutation = perm_summand_profile(P, E)
            for j in np.flatnonzero(general != permutation):
                report.check(False, p=p, invariants=inv.as_list(), element=E.to_numpy()[:, j].tolist())
            report.checked += int(np.count_nonzero(general == permutation))
    return report


def prop37(primes: Sequence[int] = (2, 3, 5), trials: int = 1000, seed: int = 0,
           max_dim: int = 6) -> SuiteReport:
    report = SuiteReport("prop37", seed=seed)
    for p in primes:
        result = check_prop37(p, trials, seed, max_dim)
        report.details[str(p)] = {
            "trials": result.trials,
            "surjections": result.surjections,
            "passed_filter": result.passed_filter,
            "violations": len(result.violations),
        }
        for record in result.records:
            report.check(record.ok, p=p, seed=seed, **record.to_json())
    return report


def thm38(resolve_primes: Sequence[int] = (2, 3, 5, 7, 11, 13), max_dim: int = 6,
          budget: Optional[SearchBudget] = None, jobs: int = 1, oracle: bool = True) -> SuiteReport:
    """
    构造性上界：M_x 的分解正合、各项为置换模、长度等于 size(x)；
    覆盖步不经直和项分裂；oracle 在小规模上给出相同的最小长度
    """
    report = SuiteReport("thm38")
    for p in resolve_primes:
        for x in range(1, p + 1):
            R = build_resolution(from_invariants(Invariants.of(p, x)))
            report.check(check_exact(R), p=p, x=x, reason="not exact")
            report.check(R.is_permutation_complex(), p=p, x=x, reason="non-permutation term")
            report.check(R.length == size_int(p, x), p=p, x=x, length=R.length, size=size_int(p, x))
            report.check(euler_characteristic(R) == x, p=p, x=x, reason="euler characteristic")
        if p <= 5:
            for x in range(2, p):
                step = cover_step(from_invariants(Invariants.of(p, x)))
                report.check(not has_split_through_summand(step.f) and not has_split_through_summand(step.g),
                             p=p, x=x, reason="cover step splits through a summand")
                report.check(size_module(decompose(step.K)) == size_int(p, x) - 1, p=p, x=x,
                             reason="kernel size is not size(x) - 1")

    if oracle:
        search = PpdimSearch(budget, jobs)
        targets = [inv for inv in all_invariants(2, max_dim)]
        targets += [inv for inv in all_invariants(3, max_dim)]
        targets += [Invariants.of(5, x) for x in range(1, 6)]
        agreed = 0
        for inv in targets:
            result = search.search(from_invariants(inv))
            expected = size_module(inv)
            if report.check(result.value == expected, p=inv.p, invariants=inv.as_list(),
                            oracle=result.value, size=expected, label=result.label):
                agreed += 1
        report.details["oracle"] = {"instances": len(targets), "agreed": agreed,
                                    "nodes_expanded": search.nodes_expanded}
    return report


def sums(primes: Sequence[int] = (3, 5, 7), pairs: int = 200, seed: int = 0, max_dim: int = 6) -> SuiteReport:
    """size(M ⊕ N) = max，size(M ⊗ N) ≤ 和；p ≥ 5 时 M_3 ⊗ M_3 严格小于和"""
    report = SuiteReport("sums", seed=seed)
    rng = np.random.default_rng(seed)
    for p in primes:
        for _ in range(pairs):
            A = random_invariants(p, max_dim, rng)
            B = random_invariants(p, max_dim, rng)
            report.check(size_module(A.union(B)) == max(size_module(A), size_module(B)),
                         p=p, M=A.as_list(), N=B.as_list(), law="direct sum")
            T = decompose(tensor(from_invariants(A), from_invariants(B)))
            report.check(size_module(T) <= size_module(A) + size_module(B),
                         p=p, M=A.as_list(), N=B.as_list(), tensor=T.as_list(), law="tensor")
        if p >= 5:
            three = from_invariants(Invariants.of(p, 3))
            witness = size_module(decompose(tensor(three, three)))
            report.check(witness < 2 * size_int(p, 3), p=p, witness=witness, law="strict tensor")
            report.details[f"strict_witness_p{p}"] = witness

    small = [Invariants.of(3, 2), Invariants.of(3, 2, 1), Invariants.of(3, 3, 2)]
    for A in small:
        for B in small:
            R = build_resolution(from_invariants(A))
            S = build_resolution(from_invariants(B))
            total = direct_sum_resolutions(R, S)
            report.check(check_exact(total) and total.length == max(R.length, S.length),
                         M=A.as_list(), N=B.as_list(), construction="direct sum of resolutions")
            product = tensor_resolutions(R, S)
            report.check(check_exact(product) and product.is_permutation_complex()
                         and product.length <= R.length + S.length,
                         M=A.as_list(), N=B.as_list(), construction="tensor of resolutions")
    return report


def closed_form(max_prime: int = 97) -> SuiteReport:
    """递推与闭式一致、群的 ppdim、前驱唯一、链的位置即 size"""
    report = SuiteReport("closed-form")
    for p in (int(q) for q in galois.primes(max_prime)):
        table = size_table(p)
        for x in range(1, p + 1):
            report.check(table[x] == closed_form_size(p, x), p=p, x=x, recursion=table[x],
                         closed_form=closed_form_size(p, x))
        for x in range(2, p):
            report.check(table[p - x] != table[p - x + 1], p=p, x=x, reason="predecessor not unique")
        report.check(group_ppdim(p) == (p - 2 if p >= 3 else 0), p=p, group_ppdim=group_ppdim(p))
        chain = chain_diagram(p)
        report.check(all(table[x] == i for i, x in enumerate(chain.entries)), p=p, chain=list(chain.entries))
    return report


SUITES = ("lemma34", "lemma35", "prop37", "thm38", "sums", "closed-form")


@log_execution_time(logger)
def run_suite(name: str, settings: Any = None, budget: Optional[SearchBudget] = None,
              jobs: int = 1, seed: Optional[int] = None) -> List[SuiteReport]:
    """
    按名称运行套件（"all" 运行全部）

    Args:
        settings: VerifySettings，None 时使用默认值
    """
    primes = list(getattr(settings, 'primes', [2, 3, 5]))
    resolve_primes = list(getattr(settings, 'resolve_primes', [2, 3, 5, 7, 11, 13]))
    max_dim = int(getattr(settings, 'max_dim', 6))
    trials = int(getattr(settings, 'trials', 1000))
    seed = int(seed if seed is not None else getattr(settings, 'seed', 0))

    runners: Dict[str, Callable[[], SuiteReport]] = {
        "lemma34": lambda: lemma34(primes, min(max_dim, 5)),
        "lemma35": lambda: lemma35(primes, max_dim),
        "prop37": lambda: prop37(primes, trials, seed, max_dim),
        "thm38": lambda: thm38(resolve_primes, max_dim, budget, jobs),
        "sums": lambda: sums((3, 5, 7), 200, seed, max_dim),
        "closed-form": lambda: closed_form(97),
    }
    names = SUITES if name == "all" else (name,)
    unknown = [n for n in names if n not in runners]
    if unknown:
        raise InputException(f"Unknown suite '{unknown[0]}', expected one of {', '.join(SUITES)} or all")

    monitor = PerformanceMonitor()
    reports = []
    for suite in names:
        start = monitor.start_timer(suite)
        report = runners[suite]()
        elapsed = monitor.end_timer(suite, start)
        report.timings = {"seconds": round(elapsed, 3)}
        logger.info(f"Suite {suite}: {report.checked} checks, {report.failure_count} failures")
        reports.append(report)
    return reports
