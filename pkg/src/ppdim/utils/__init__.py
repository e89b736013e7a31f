"""
ppdim 工具模块
"""

from .logger import get_logger, PpdimLogger, LogLevel, MethodTimer, PerformanceMonitor, log_execution_time

__all__ = [
    "get_logger",
    "PpdimLogger",
    "LogLevel",
    "MethodTimer",
    "PerformanceMonitor",
    "log_execution_time"
]
