# curvecount/core/logging.py

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def resolve_level(configured: str, verbosity: int = 0) -> int:
    """Nível efetivo: -v baixa para INFO, -vv para DEBUG."""
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    level = logging.getLevelName(configured.upper())
    return level if isinstance(level, int) else logging.WARNING


def setup_logging(configured: str = "WARNING", verbosity: int = 0) -> None:
    """Configurar o logger raiz uma vez, sempre em stderr."""
    logging.basicConfig(
        level=resolve_level(configured, verbosity),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
