"""
命令行前端
"""

from .inputs import parse_module_input, parse_int_list
from .main import build_parser, run, _main

__all__ = [
    "parse_module_input",
    "parse_int_list",
    "build_parser",
    "run",
    "_main"
]
