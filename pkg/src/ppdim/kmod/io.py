"""
模的 JSON 表示

{"p": 5, "matrix": [[...], ...]} 或 {"p": 5, "invariants": [3, 1]}
"""

import json
from typing import Any, Dict, List

from .module import Invariants, ModuleRep, decompose, from_invariants
from ..exceptions.ppdim_exceptions import InputException


def module_to_json(M: ModuleRep, include_invariants: bool = True) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"p": M.p, "dim": M.dim, "matrix": M.N.to_lists()}
    if include_invariants:
        doc["invariants"] = decompose(M).as_list()
    return doc


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def integer_rows(rows: Any, source: str = "matrix") -> List[List[int]]:
    """校验矩阵为整数行的列表"""
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InputException(f"{source} must be a list of rows", source=source)
    bad = [v for row in rows for v in row if not _is_int(v)]
    if bad:
        raise InputException(f"{source} entries must be integers, got {bad[0]!r}", source=source)
    return rows


def module_from_json(doc: Any) -> ModuleRep:
    """从字典或 JSON 字符串解析；矩阵优先于不变量"""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise InputException(f"Malformed module JSON: {e}", cause=e)
    if not isinstance(doc, dict) or "p" not in doc:
        raise InputException("Module JSON must be an object with a 'p' field")
    p = doc["p"]
    if not _is_int(p):
        raise InputException(f"'p' must be an integer, got {p!r}")
    if "matrix" in doc:
        rows = integer_rows(doc["matrix"], "'matrix'")
        if rows == [] and doc.get("dim", 0) == 0:
            return ModuleRep.zero(p)
        return ModuleRep.from_rows(p, rows)
    if "invariants" in doc:
        parts = doc["invariants"]
        if not isinstance(parts, list) or not all(_is_int(x) for x in parts):
            raise InputException(f"'invariants' must be a list of integers, got {parts!r}")
        return from_invariants(Invariants(p, tuple(parts)))
    raise InputException("Module JSON needs either 'matrix' or 'invariants'")


def invariants_to_json(inv: Invariants) -> Dict[str, Any]:
    return {"p": inv.p, "invariants": inv.as_list(), "dim": inv.dim}
