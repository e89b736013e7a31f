"""
ppdim 命令行入口

结果（JSON/DOT/文本）写到 stdout，日志与诊断写到 stderr。
退出码：0 成功，1 验证失败，2 输入错误。
"""

import argparse
import sys
from typing import Optional, Sequence

from .commands import (
    EXIT_INPUT,
    cmd_chain,
    cmd_decompose,
    cmd_oracle,
    cmd_ppdim,
    cmd_resolve,
    cmd_size,
    cmd_verify
)
from ..config import (
    CliSettings,
    ConfigurationPropertiesBinder,
    LoggingSettings,
    OracleSettings,
    PropertyValueResolver,
    VerifySettings
)
from ..exceptions.ppdim_exceptions import ConfigurationException, PpdimException
from ..oracle import SUITES
from ..utils.logger import LogLevel, PpdimLogger, get_logger

logger = get_logger('cli')


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "markdown"), default=None,
                        help="Output format (default: text).")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARN or ERROR.")
    common.add_argument("--config", default=None, help="Property file (.json, .yaml or .properties).")
    common.add_argument("--jobs", type=int, default=None, help="Worker threads for the oracle search.")
    return common


def _module_options() -> argparse.ArgumentParser:
    module = argparse.ArgumentParser(add_help=False)
    module.add_argument("--p", type=int, default=None, help="Prime p.")
    module.add_argument("--invariants", default=None, help="Jordan block sizes, e.g. 3,2.")
    module.add_argument("--matrix-file", default=None, help="JSON matrix of the T-action (or module JSON).")
    module.add_argument("--module", default=None, help="Module JSON file.")
    return module


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    module = _module_options()
    parser = argparse.ArgumentParser(prog="ppdim",
                                     description="Permutation dimensions of modules over the cyclic group C_p.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    size_parser = subparsers.add_parser("size", parents=[common, module], help="p-distance of an integer or module.")
    size_parser.add_argument("--x", type=int, default=None, help="Integer in [1, p].")

    chain_parser = subparsers.add_parser("chain", parents=[common], help="Chain 1, p-1, 2, p-2, ...")
    chain_parser.add_argument("--p", type=int, default=None, help="Prime p.")
    chain_parser.add_argument("--dot", action="store_true", help="Emit Graphviz DOT.")

    subparsers.add_parser("decompose", parents=[common, module], help="Invariants of a module.")

    resolve_parser = subparsers.add_parser("resolve", parents=[common, module],
                                           help="Constructive permutation resolution (JSON).")
    resolve_parser.add_argument("--check", action="store_true", help="Verify exactness.")

    subparsers.add_parser("ppdim", parents=[common, module], help="Permutation dimension.")

    oracle_parser = subparsers.add_parser("oracle", parents=[common, module],
                                          help="Brute-force minimal resolution length.")
    oracle_parser.add_argument("--max-p-copies", type=int, default=None)
    oracle_parser.add_argument("--max-1-copies", type=int, default=None)
    oracle_parser.add_argument("--max-depth", type=int, default=None)
    oracle_parser.add_argument("--max-elements", type=int, default=None)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run property suites.")
    verify_parser.add_argument("--suite", default="all", choices=SUITES + ("all",))
    verify_parser.add_argument("--seed", type=int, default=None)
    verify_parser.add_argument("--trials", type=int, default=None)
    verify_parser.add_argument("--max-dim", type=int, default=None)
    return parser


def _configure(args) -> ConfigurationPropertiesBinder:
    resolver = PropertyValueResolver()
    if args.config:
        resolver.load_from_file(args.config)
    binder = ConfigurationPropertiesBinder(resolver)
    logging_settings = binder.bind(LoggingSettings, {"level": args.log_level})
    try:
        level = LogLevel.parse(str(logging_settings.level))
    except ValueError as e:
        raise ConfigurationException(f"Unknown log level '{logging_settings.level}', expected DEBUG, INFO, WARN or ERROR",
                                     config_key="ppdim.logging.level", cause=e)
    PpdimLogger.configure(level)
    return binder


def run(args) -> int:
    binder = _configure(args)
    cli = binder.bind(CliSettings, {"format": args.format})
    oracle_overrides = {
        "jobs": args.jobs,
        "max_p_copies": getattr(args, "max_p_copies", None),
        "max_1_copies": getattr(args, "max_1_copies", None),
        "max_depth": getattr(args, "max_depth", None),
        "max_elements": getattr(args, "max_elements", None),
    }
    oracle = binder.bind(OracleSettings, oracle_overrides)

    if args.command == "size":
        code, output = cmd_size(args, cli)
    elif args.command == "chain":
        code, output = cmd_chain(args, cli)
    elif args.command == "decompose":
        code, output = cmd_decompose(args, cli)
    elif args.command == "resolve":
        code, output = cmd_resolve(args, cli)
    elif args.command == "ppdim":
        code, output = cmd_ppdim(args, cli)
    elif args.command == "oracle":
        code, output = cmd_oracle(args, cli, oracle)
    else:
        verify = binder.bind(VerifySettings, {"trials": args.trials, "max_dim": args.max_dim})
        code, output = cmd_verify(args, cli, verify, oracle)
    sys.stdout.write(output)
    return code


def _main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except PpdimException as e:
        logger.debug(e.get_detailed_message())
        print(f"ppdim: error: {e}", file=sys.stderr)
        for suggestion in e.get_suggestions():
            print(f"  hint: {suggestion}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(_main())
