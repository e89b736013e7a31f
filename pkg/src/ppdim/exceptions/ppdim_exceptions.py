import traceback
from typing import Optional, Dict, Any, List


class PpdimException(Exception):
    """ppdim 基础异常"""

    def __init__(self, message: str, cause: Optional[Exception] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.cause = cause
        self.context = context or {}

    def __str__(self) -> str:
        msg = super().__str__()
        if self.cause:
            msg += f" (Caused by: {type(self.cause).__name__}: {self.cause})"
        return msg

    def get_detailed_message(self) -> str:
        """获取详细错误信息"""
        msg = str(self)
        if self.context:
            msg += f"\nContext: {self.context}"
        if self.cause:
            msg += f"\nCause traceback:\n{''.join(traceback.format_tb(self.cause.__traceback__))}"
        return msg

    def get_suggestions(self) -> List[str]:
        """获取修复建议"""
        return []


class FieldException(PpdimException):
    """素域异常 - 模数不是素数"""

    def __init__(self, p: Any, message: Optional[str] = None):
        super().__init__(message or f"p must be prime, got {p}", context={'p': p})
        self.p = p

    def get_suggestions(self) -> List[str]:
        return ["使用素数模数，例如 2, 3, 5, 7, 11, 13"]


class DimensionMismatchException(PpdimException):
    """维数不匹配异常"""

    def __init__(self, operation: str, expected: Any, actual: Any):
        message = f"Dimension mismatch in {operation}: expected {expected}, got {actual}"
        super().__init__(message, context={'operation': operation, 'expected': expected, 'actual': actual})
        self.operation = operation
        self.expected = expected
        self.actual = actual


class InvalidModuleException(PpdimException):
    """非法模异常 - 作用矩阵不满足 N^p = 0 或不变量越界"""

    def __init__(self, message: str, p: Optional[int] = None, cause: Optional[Exception] = None):
        super().__init__(message, cause, context={'p': p} if p is not None else None)
        self.p = p

    def get_suggestions(self) -> List[str]:
        suggestions = []
        if "k[T]/T^p" in str(self):
            suggestions.append("检查作用矩阵是否幂零，且所有 Jordan 块的大小不超过 p")
        if "out of range" in str(self):
            suggestions.append("不变量必须位于区间 [1, p]")
        if "prime" in str(self):
            suggestions.append("两个模必须定义在同一个素域上")
        return suggestions


class NotEquivariantException(PpdimException):
    """矩阵不与 T 作用交换"""

    def __init__(self, message: str = "Matrix does not intertwine the T-actions"):
        super().__init__(message)


class ZeroElementException(PpdimException):
    """要求非零元素的运算收到了零元素"""

    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a nonzero element", context={'operation': operation})
        self.operation = operation


class NotCyclicException(PpdimException):
    """要求循环模的运算收到了非循环模"""

    def __init__(self, invariants: Any):
        super().__init__(f"Expected a cyclic module, got invariants {invariants}")
        self.invariants = invariants


class NotPermutationException(PpdimException):
    """要求置换模的运算收到了非置换模"""

    def __init__(self, invariants: Any):
        super().__init__(f"Expected a permutation module (parts in {{1, p}}), got invariants {invariants}")
        self.invariants = invariants


class NotInvertibleException(PpdimException):
    """截断多项式常数项为零，不可逆"""

    def __init__(self, message: str = "Truncated polynomial with zero constant term is not invertible"):
        super().__init__(message)


class ResolutionException(PpdimException):
    """构造置换分解时内部一致性检查失败"""

    def __init__(self, message: str, step: Optional[int] = None, cause: Optional[Exception] = None):
        super().__init__(message, cause, context={'step': step} if step is not None else None)
        self.step = step


class BudgetExceededException(PpdimException):
    """搜索超出预算"""

    def __init__(self, reason: str, budget: Any = None):
        super().__init__(f"Search budget exceeded: {reason}", context={'budget': budget})
        self.reason = reason
        self.budget = budget

    def get_suggestions(self) -> List[str]:
        return [
            "增大 --max-depth 或 --max-elements",
            "缩小输入模的维数",
        ]


class ConfigurationException(PpdimException):
    """配置异常"""

    def __init__(self, message: str, config_key: Optional[str] = None, cause: Optional[Exception] = None):
        super().__init__(message, cause)
        self.config_key = config_key


class InputException(PpdimException):
    """命令行输入异常"""

    def __init__(self, message: str, source: Optional[str] = None, cause: Optional[Exception] = None):
        super().__init__(message, cause, context={'source': source} if source else None)
        self.source = source
