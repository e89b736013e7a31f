"""
ppdim 扩展模块
"""

from .memo import MemoTable

__all__ = [
    'MemoTable'
]
