# core/logging_config.py
import logging
import sys
from typing import Optional

from flask import Flask

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _level(name: Optional[str]) -> int:
    return getattr(logging, (name or "INFO").upper(), logging.INFO)


def configure_logging(app: Flask) -> None:
    """Prosta konfiguracja logowania."""
    log_level_name = app.config.get("LOG_LEVEL", "INFO")
    log_level = _level(log_level_name)

    logging.basicConfig(level=log_level, format=LOG_FORMAT)

    app.logger.setLevel(log_level)
    app.logger.info("Logging configured, level=%s", log_level_name)


def configure_cli_logging(level_name: Optional[str] = None) -> None:
    """Logi CLI idą na stderr, żeby --json na stdout był stabilny."""
    logging.basicConfig(level=_level(level_name), format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger(__name__).debug("CLI logging configured, level=%s", level_name)
