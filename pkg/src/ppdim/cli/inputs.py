"""
命令行的模输入：--p/--invariants、--matrix-file 或 --module
"""

import json
from pathlib import Path
from typing import Any, List, Optional

from ..exactlin import prime_field
from ..exceptions.ppdim_exceptions import InputException
from ..kmod import Invariants, ModuleRep, from_invariants, integer_rows, module_from_json


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as e:
        raise InputException(f"Cannot read {path}: {e.strerror}", source=path, cause=e)
    except json.JSONDecodeError as e:
        raise InputException(f"Malformed JSON in {path}: {e.msg} (line {e.lineno})", source=path, cause=e)


def parse_int_list(text: str, option: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise InputException(f"{option} expects comma-separated integers, got '{text}'", source=option, cause=e)


def parse_module_input(p: Optional[int] = None, invariants: Optional[str] = None,
                       matrix_file: Optional[str] = None, module_file: Optional[str] = None) -> ModuleRep:
    """
    构造并校验输入模（N^p = 0）

    Raises:
        FieldException: p 不是素数
        InvalidModuleException: 不变量越界，或矩阵不是 k[T]/T^p-模
        InputException: 缺少输入、文件不可读或格式错误
    """
    if module_file is not None:
        return module_from_json(_read_json(module_file))

    if matrix_file is not None:
        doc = _read_json(matrix_file)
        if isinstance(doc, dict):
            if p is not None:
                doc = {**doc, "p": p}
            return module_from_json(doc)
        if p is None:
            raise InputException("--matrix-file with a bare matrix needs --p", source=matrix_file)
        prime_field(p)
        if doc == []:
            return ModuleRep.zero(p)
        return ModuleRep.from_rows(p, integer_rows(doc, matrix_file))

    if invariants is not None:
        if p is None:
            raise InputException("--invariants needs --p")
        prime_field(p)
        return from_invariants(Invariants(p, tuple(parse_int_list(invariants, "--invariants"))))

    raise InputException("No module given: use --p P --invariants a,b,c, --matrix-file F or --module F")
