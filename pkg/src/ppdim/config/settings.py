"""ppdim 设置类"""

from .configuration import configuration
from .value import value


@configuration(prefix="ppdim.oracle")
class OracleSettings:
    """暴力预言机的搜索预算"""
    max_p_copies = value("max-p-copies", default=6, required=False)
    max_1_copies = value("max-1-copies", default=6, required=False)
    max_depth = value("max-depth", default=4, required=False)
    max_elements = value("max-elements", default=200000, required=False)
    jobs = value("jobs", default=1, required=False)


@configuration(prefix="ppdim.verify")
class VerifySettings:
    """性质验证套件参数"""
    seed = value("seed", default=0, required=False)
    trials = value("trials", default=1000, required=False)
    max_dim = value("max-dim", default=6, required=False)
    primes = value("primes", default=[2, 3, 5], required=False)
    resolve_primes = value("resolve-primes", default=[2, 3, 5, 7, 11, 13], required=False)


@configuration(prefix="ppdim.cli")
class CliSettings:
    max_resolve_prime = value("max-resolve-prime", default=97, required=False)
    format = value("format", default="text", required=False)


@configuration(prefix="ppdim.logging")
class LoggingSettings:
    level = value("level", default="WARN", required=False)
