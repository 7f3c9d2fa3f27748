# config/logging_setup.py
import logging
import logging.config
import os

import numpy as np

MAX_MESSAGE_LENGTH = 2000


class CompactArrays(logging.Filter):
    """Matrix dumps span many lines and can be huge: fold them onto one line and cut them off."""

    def filter(self, record: logging.LogRecord) -> bool:
        msg = str(record.getMessage())
        if "\n" in msg:
            msg = " ".join(msg.split())
        if len(msg) > MAX_MESSAGE_LENGTH:
            msg = msg[:MAX_MESSAGE_LENGTH] + " [TRUNCATED]"
        record.msg = msg
        record.args = ()
        return True


def setup_logging(level: str = "") -> None:
    """Configure the root logger on stderr (stdout is reserved for reports) plus an optional LOG_FILE."""
    level = (level or os.getenv("LOG_LEVEL", "WARNING")).upper()
    log_file = os.getenv("LOG_FILE", "")

    fmt = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
    datefmt = "%Y-%m-%d %H:%M:%S"

    # arrays interpolated into DEBUG messages
    np.set_printoptions(precision=int(os.getenv("LOG_ARRAY_PRECISION", "6")), suppress=True, linewidth=160)

    handlers = {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "level": level,
            "formatter": "standard",
            "filters": ["compact_arrays"],
        }
    }

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": level,
            "filename": log_file,
            "maxBytes": 5 * 1024 * 1024,
            "backupCount": 3,
            "encoding": "utf-8",
            "formatter": "standard",
            "filters": ["compact_arrays"],
        }

    config = {
        "version": 1,
        "disable_existing_loggers": False,
        "filters": {"compact_arrays": {"()": CompactArrays}},
        "formatters": {"standard": {"format": fmt, "datefmt": datefmt}},
        "handlers": handlers,
        "loggers": {
            "": {"level": level, "handlers": list(handlers.keys())},
            # numpy/scipy RuntimeWarnings (near-singular solves) routed through logging
            "py.warnings": {"level": "WARNING"},
        },
    }

    logging.config.dictConfig(config)
    logging.captureWarnings(True)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


__all__ = ["setup_logging", "get_logger", "CompactArrays"]
