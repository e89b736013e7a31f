"""
独立的暴力验证：最小分解长度搜索、直和项分裂判别与性质套件
"""

from .budget import (
    CERTIFIED,
    CERTIFIED_WITHIN_BUDGET,
    EXHAUSTED,
    UPPER_BOUND,
    SearchBudget,
    SearchResult
)
from .split import has_split_through_summand, split_witnesses
from .search import (
    PpdimSearch,
    brute_ppdim,
    canonical_generator,
    clear_search_caches,
    cover_kernels,
    search_ppdim
)
from .prop37 import (
    Prop37Report,
    Prop37Trial,
    check_prop37,
    evaluate_ses,
    conjugated_model,
    quotient_invariants,
    random_invariants,
    random_module,
    random_surjection,
    satisfies_hypothesis
)
from .suites import (
    SUITES,
    SuiteReport,
    all_invariants,
    closed_form,
    lemma34,
    lemma35,
    prop37,
    reports_to_markdown,
    run_suite,
    sums,
    thm38
)

__all__ = [
    "CERTIFIED",
    "CERTIFIED_WITHIN_BUDGET",
    "EXHAUSTED",
    "UPPER_BOUND",
    "SearchBudget",
    "SearchResult",
    "has_split_through_summand",
    "split_witnesses",
    "PpdimSearch",
    "brute_ppdim",
    "canonical_generator",
    "clear_search_caches",
    "cover_kernels",
    "search_ppdim",
    "Prop37Report",
    "Prop37Trial",
    "check_prop37",
    "evaluate_ses",
    "conjugated_model",
    "quotient_invariants",
    "random_invariants",
    "random_module",
    "random_surjection",
    "satisfies_hypothesis",
    "SUITES",
    "SuiteReport",
    "all_invariants",
    "closed_form",
    "lemma34",
    "lemma35",
    "prop37",
    "reports_to_markdown",
    "run_suite",
    "sums",
    "thm38"
]
