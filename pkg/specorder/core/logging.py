"""
Specorder - Logging Configuration
Structured logging on stderr; stdout is reserved for emitted artefacts
"""

import logging
import sys
from datetime import datetime, timezone
from typing import Any

import orjson

from specorder.config import settings

UTC = timezone.utc

_RESERVED = frozenset(
    {
        "name",
        "msg",
        "args",
        "created",
        "filename",
        "funcName",
        "levelname",
        "levelno",
        "lineno",
        "module",
        "msecs",
        "pathname",
        "process",
        "processName",
        "relativeCreated",
        "stack_info",
        "exc_info",
        "exc_text",
        "thread",
        "threadName",
        "taskName",
        "message",
    }
)


class JSONFormatter(logging.Formatter):
    """
    JSON log formatter for structured logging.
    One object per line, extra record attributes merged in.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": datetime.now(UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key not in _RESERVED:
                log_data[key] = value

        return orjson.dumps(log_data, default=str).decode("utf-8")


class DevelopmentFormatter(logging.Formatter):
    """
    Human-readable log formatter.
    Includes colors for different log levels.
    """

    COLORS = {
        "DEBUG": "\033[36m",  # Cyan
        "INFO": "\033[32m",  # Green
        "WARNING": "\033[33m",  # Yellow
        "ERROR": "\033[31m",  # Red
        "CRITICAL": "\033[35m",  # Magenta
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, self.RESET)
        timestamp = datetime.now(UTC).strftime("%Y-%m-%d %H:%M:%S")

        message = f"{color}{timestamp} | {record.levelname:8}{self.RESET} | {record.name} | {record.getMessage()}"

        extras = [f"{k}={v}" for k, v in record.__dict__.items() if k not in _RESERVED]
        if extras:
            message += f" | {', '.join(extras)}"

        if record.exc_info:
            message += f"\n{self.formatException(record.exc_info)}"

        return message


def setup_logging(level: str | None = None, fmt: str | None = None) -> None:
    """
    Configure the ``specorder`` logger hierarchy.

    Args:
        level: Overrides ``settings.log_level`` for this process
        fmt: Overrides ``settings.log_format`` ("json" or "console")
    """
    log_level = getattr(logging, (level or settings.log_level).upper(), logging.WARNING)

    root_logger = logging.getLogger("specorder")
    root_logger.setLevel(log_level)
    root_logger.propagate = False

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)

    if (fmt or settings.log_format) == "json":
        handler.setFormatter(JSONFormatter())
    else:
        handler.setFormatter(DevelopmentFormatter())

    root_logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the specified name.

    Args:
        name: Logger name, typically __name__ of the module

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)


class LoggerAdapter(logging.LoggerAdapter):  # type: ignore[type-arg]
    """Logger adapter that attaches run context (family, rank, J) to records."""

    def process(self, msg: str, kwargs: Any) -> tuple[str, Any]:
        extra = kwargs.get("extra", {})
        extra.update(self.extra or {})
        kwargs["extra"] = extra
        return msg, kwargs


def get_context_logger(name: str, **context: Any) -> LoggerAdapter:
    """
    Get a logger with additional context attached to all messages.

    Example:
        logger = get_context_logger(__name__, family="C", rank=3)
        logger.info("Relation matrix complete")
    """
    return LoggerAdapter(get_logger(name), context)
