"""
子命令实现：每个函数返回 (退出码, 输出文本)
"""

import json
from typing import Any, Dict, List, Tuple

from .inputs import parse_module_input
from ..config import CliSettings, OracleSettings, VerifySettings
from ..exceptions.ppdim_exceptions import InputException
from ..kmod import ModuleRep, decompose, invariants_to_json
from ..oracle import SearchBudget, reports_to_markdown, run_suite, search_ppdim
from ..pdist import chain_diagram, size_int, size_module
from ..resolve import build_resolution, check_exact, resolution_to_json
from ..utils.logger import get_logger

logger = get_logger('cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

Outcome = Tuple[int, str]


def _dump(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def _module(args) -> ModuleRep:
    return parse_module_input(args.p, args.invariants, args.matrix_file, args.module)


def cmd_size(args, cli: CliSettings) -> Outcome:
    if args.x is not None:
        if args.p is None:
            raise InputException("size --x needs --p")
        value = size_int(args.p, args.x)
        doc: Dict[str, Any] = {"p": args.p, "x": args.x, "size": value}
    else:
        inv = decompose(_module(args))
        value = size_module(inv)
        doc = {"p": inv.p, "invariants": inv.as_list(), "size": value}
    return EXIT_OK, _dump(doc) if cli.format == "json" else f"{value}\n"


def cmd_chain(args, cli: CliSettings) -> Outcome:
    if args.p is None:
        raise InputException("chain needs --p")
    chain = chain_diagram(args.p)
    if args.dot:
        return EXIT_OK, chain.to_dot()
    if cli.format == "json":
        return EXIT_OK, _dump({"p": chain.p, "chain": list(chain.entries)})
    return EXIT_OK, chain.to_text() + "\n"


def cmd_decompose(args, cli: CliSettings) -> Outcome:
    inv = decompose(_module(args))
    if cli.format == "json":
        return EXIT_OK, _dump(invariants_to_json(inv))
    return EXIT_OK, f"{inv}\n"


def cmd_resolve(args, cli: CliSettings) -> Outcome:
    M = _module(args)
    if M.p > cli.max_resolve_prime:
        raise InputException(f"resolve is limited to p <= {cli.max_resolve_prime}, got p = {M.p}")
    R = build_resolution(M)
    exact = check_exact(R) if args.check else None
    code = EXIT_FAILED if exact is False else EXIT_OK
    if exact is False:
        logger.error(f"Resolution of {decompose(M)} failed the exactness check")
    return code, _dump(resolution_to_json(R, exact))


def cmd_ppdim(args, cli: CliSettings) -> Outcome:
    inv = decompose(_module(args))
    value = size_module(inv)
    if cli.format == "json":
        return EXIT_OK, _dump({"p": inv.p, "invariants": inv.as_list(), "ppdim": value})
    return EXIT_OK, f"{value}\n"


def cmd_oracle(args, cli: CliSettings, oracle: OracleSettings) -> Outcome:
    M = _module(args)
    inv = decompose(M)
    result = search_ppdim(M, SearchBudget.from_settings(oracle), int(oracle.jobs))
    expected = size_module(inv)
    agrees = result.value == expected
    if result.value is None:
        logger.error(f"Oracle budget exhausted for {inv}")
    elif not agrees:
        logger.error(f"Oracle found {result.value} but size is {expected} for {inv}")
    code = EXIT_OK if agrees else EXIT_FAILED
    if cli.format == "json":
        doc = {"p": inv.p, "invariants": inv.as_list(), "size": expected, "agrees": agrees, **result.to_json()}
        return code, _dump(doc)
    value = "none" if result.value is None else str(result.value)
    return code, f"oracle {value} ({result.label}), size {expected}\n"


def cmd_verify(args, cli: CliSettings, verify: VerifySettings, oracle: OracleSettings) -> Outcome:
    reports = run_suite(args.suite, verify, SearchBudget.from_settings(oracle), int(oracle.jobs), args.seed)
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED
    if cli.format == "json":
        return code, _dump([r.to_json() for r in reports])
    if cli.format == "markdown":
        return code, reports_to_markdown(reports)
    lines: List[str] = []
    for report in reports:
        status = "ok" if report.ok else "FAILED"
        lines.append(f"{report.name}: {status} ({report.checked} checks, {report.failure_count} failures)")
    return code, "\n".join(lines) + "\n"
