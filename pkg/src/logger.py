"""Root logging setup shared by the command line and library code."""

import logging
from typing import Optional

from src.config import Config

_configured = False


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configure the root logger once from ``Config.LOGGING``.

    Args:
        level (str | None): Overrides ``Config.LOGGING.LEVEL`` when given.
    """
    global _configured
    if _configured:
        return
    logging.basicConfig(
        level=(level or Config.LOGGING.LEVEL).upper(),
        format=Config.LOGGING.FORMAT,
    )
    _configured = True
