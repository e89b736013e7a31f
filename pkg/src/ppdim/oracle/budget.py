"""
搜索预算与搜索结果
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from ..exceptions.ppdim_exceptions import ConfigurationException

CERTIFIED = "certified"
CERTIFIED_WITHIN_BUDGET = "certified within budget"
# 找到了分解，但更短长度的否定因跳过分支而不完整
UPPER_BOUND = "upper bound within budget"
EXHAUSTED = "budget exhausted"


@dataclass(frozen=True)
class SearchBudget:
    """
    暴力搜索的上限

    max_p_copies / max_1_copies 限制覆盖 P = a·M_p ⊕ b·M_1 中的 a、b（另受 M 的生成元个数限制），
    max_depth 为迭代加深的最大长度，max_elements 为单个模元素枚举的上限。
    """

    max_p_copies: int = 6
    max_1_copies: int = 6
    max_depth: int = 4
    max_elements: int = 200000

    def __post_init__(self):
        for name, amount in asdict(self).items():
            if not isinstance(amount, int) or amount <= 0:
                raise ConfigurationException(f"{name} must be a positive integer, got {amount!r}",
                                             config_key="ppdim.oracle." + name.replace("_", "-"))

    @classmethod
    def from_settings(cls, settings: Any) -> 'SearchBudget':
        return cls(max_p_copies=int(settings.max_p_copies),
                   max_1_copies=int(settings.max_1_copies),
                   max_depth=int(settings.max_depth),
                   max_elements=int(settings.max_elements))

    def to_json(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class SearchResult:
    """最小长度（value 为 None 表示预算内未找到分解）及其可信程度"""

    value: Optional[int]
    label: str
    budget: SearchBudget
    nodes_expanded: int = 0
    skipped_branches: int = 0

    @property
    def certified(self) -> bool:
        return self.label == CERTIFIED

    @property
    def found(self) -> bool:
        return self.value is not None

    def to_json(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "label": self.label,
            "certified": self.certified,
            "budget": self.budget.to_json(),
            "nodes_expanded": self.nodes_expanded,
            "skipped_branches": self.skipped_branches,
        }
