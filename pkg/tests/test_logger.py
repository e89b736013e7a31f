import logging

import pytest

from ppdim.exceptions import BudgetExceededException, FieldException, InputException, PpdimException
from ppdim.utils.logger import LogLevel, PerformanceMonitor, PpdimLogger, get_logger, log_execution_time


def test_parse_levels():
    assert LogLevel.parse("warning") is LogLevel.WARN
    assert LogLevel.parse(" debug ") is LogLevel.DEBUG
    with pytest.raises(ValueError):
        LogLevel.parse("LOUD")


def test_loggers_share_namespace():
    logger = get_logger("kmod")
    assert logger.name == "ppdim.kmod"
    assert get_logger("kmod") is logger


def test_set_level():
    PpdimLogger.configure(LogLevel.DEBUG)
    assert logging.getLogger("ppdim").level == logging.DEBUG
    PpdimLogger.set_level(LogLevel.WARN)
    assert logging.getLogger("ppdim").level == logging.WARNING


def test_log_execution_time_passes_through():
    @log_execution_time(get_logger("test"))
    def double(x):
        return 2 * x

    @log_execution_time(get_logger("test"))
    def fail():
        raise InputException("bad input")

    assert double(4) == 8
    assert double.__name__ == "double"
    with pytest.raises(InputException):
        fail()


def test_performance_monitor():
    monitor = PerformanceMonitor()
    start = monitor.start_timer("step")
    elapsed = monitor.end_timer("step", start)
    assert elapsed >= 0
    assert monitor.timings == {"step": [elapsed]}


def test_exception_messages():
    error = FieldException(4)
    assert str(error) == "p must be prime, got 4"
    assert error.get_suggestions()
    wrapped = InputException("Cannot read x.json", source="x.json", cause=OSError("gone"))
    assert "Caused by: OSError: gone" in str(wrapped)
    assert "Context" not in PpdimException("plain").get_detailed_message()
    budget = BudgetExceededException("too many elements", budget=10)
    assert str(budget) == "Search budget exceeded: too many elements"
    assert "budget" in budget.get_detailed_message()
