"""
Tests for settings, logging and the exception hierarchy.
"""

import logging

import orjson
import pytest

from specorder.config import Settings
from specorder.core.exceptions import (
    EXIT_USAGE,
    EXIT_VIOLATION,
    BoundExceededError,
    QuotientMembershipError,
    SpecOrderError,
    TheoremViolationError,
)
from specorder.core.logging import JSONFormatter, get_context_logger, setup_logging

# =============================================================================
# Settings
# =============================================================================


def test_settings_defaults():
    config = Settings()
    assert config.max_group_order == 1_000_000
    assert config.exhaustive_order == 48
    assert config.log_format == "console"


def test_settings_read_environment(monkeypatch):
    monkeypatch.setenv("MAX_GROUP_ORDER", "10")
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    config = Settings()
    assert config.max_group_order == 10
    assert config.log_level == "DEBUG"


def test_settings_validate(monkeypatch):
    monkeypatch.setenv("SAMPLE_PAIRS", "0")
    with pytest.raises(ValueError):
        Settings()


# =============================================================================
# Logging
# =============================================================================


def test_json_formatter_merges_extras():
    record = logging.LogRecord("specorder.test", logging.INFO, __file__, 1, "Built %s", ("poset",), None)
    record.family = "C"
    record.rank = 3
    payload = orjson.loads(JSONFormatter().format(record))
    assert payload["message"] == "Built poset"
    assert payload["level"] == "INFO"
    assert payload["family"] == "C"
    assert payload["rank"] == 3
    assert "timestamp" in payload


def test_setup_logging_writes_json_to_stderr(capsys):
    setup_logging(level="INFO", fmt="json")
    get_context_logger("specorder.test", family="A", rank=2).info("Enumerated", extra={"count": 6})
    captured = capsys.readouterr()
    assert captured.out == ""
    payload = orjson.loads(captured.err.strip().splitlines()[-1])
    assert payload["message"] == "Enumerated"
    assert payload["count"] == 6
    assert payload["family"] == "A"
    setup_logging(level="WARNING", fmt="console")


# =============================================================================
# Exceptions
# =============================================================================


def test_error_document_shape():
    exc = BoundExceededError("W", 10)
    assert exc.to_dict() == {
        "error": "BoundExceededError",
        "error_code": "BOUND_EXCEEDED",
        "message": "Enumeration of W exceeds the configured bound of 10",
        "details": {"what": "W", "bound": 10},
    }
    assert exc.exit_code == EXIT_USAGE


def test_theorem_violation_exit_code():
    exc = TheoremViolationError("x", details={"a": 1})
    assert exc.exit_code == EXIT_VIOLATION
    assert exc.message == "Theorem violated: x"
    assert isinstance(exc, SpecOrderError)


def test_membership_error_reports_one_based_words():
    exc = QuotientMembershipError((0, 1), "^{s1}W")
    assert exc.error_code == "NOT_IN_QUOTIENT"
    assert exc.details["word"] == [1, 2]
