import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from curvecount import __version__
from curvecount.core.config import Settings
from curvecount.core.errors import (
    EXIT_INCONSISTENT,
    EXIT_OK,
    EXIT_USAGE,
    CacheError,
    CommandError,
    DegreeError,
    InconsistencyError,
    IntegralityError,
    NonExactDivisionError,
)
from curvecount.core.logging import setup_logging
from curvecount.routers import (
    nd_router,
    charnum_router,
    table_router,
    genus_router,
)
from curvecount.schemas.output import render

logger = logging.getLogger(__name__)


# ============================================================================
# CONSTRUIR O PARSER
# ============================================================================

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["plain", "json", "csv"],
        default=None,
        help="Formato de saída (padrão: CURVECOUNT_FORMAT ou plain)",
    )
    common.add_argument("--cache", type=Path, default=None, help="Arquivo de cache de n_d")
    common.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="Mais logs em stderr (-v INFO, -vv DEBUG)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecount",
        description="Contagens enumerativas exatas de curvas planas",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMANDO")

    parents = [_common_options()]
    nd_router(subparsers, parents)
    charnum_router(subparsers, parents)
    table_router(subparsers, parents)
    genus_router(subparsers, parents)
    return parser


# ============================================================================
# TRADUÇÃO DE ERROS PARA CÓDIGOS DE SAÍDA
# ============================================================================

def _validation_detail(error: ValidationError) -> str:
    return "; ".join(str(item["msg"]).removeprefix("Value error, ") for item in error.errors())


def as_command_error(error: Exception) -> CommandError:
    """Converter exceções do núcleo em CommandError com o código de saída."""
    if isinstance(error, CommandError):
        return error
    if isinstance(error, ValidationError):
        return CommandError(EXIT_USAGE, _validation_detail(error))
    if isinstance(error, (InconsistencyError, CacheError, IntegralityError, NonExactDivisionError)):
        return CommandError(EXIT_INCONSISTENT, str(error))
    if isinstance(error, DegreeError) and error.min_degree is not None:
        return CommandError(EXIT_USAGE, f"{error} (grau mínimo: {error.min_degree})")
    if isinstance(error, ValueError):
        return CommandError(EXIT_USAGE, str(error))
    return CommandError(EXIT_INCONSISTENT, f"falha inesperada: {error}")


# ============================================================================
# PONTO DE ENTRADA
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse já usa 2 para erros de uso e 0 para --help/--version
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        settings = Settings()
        setup_logging(settings.CURVECOUNT_LOG_LEVEL, args.verbose)
        fmt = args.format or settings.CURVECOUNT_FORMAT
        logger.debug("Comando %s com %s", args.command, vars(args))
        records = args.handler(args, settings)
    except Exception as e:
        error = as_command_error(e)
        logger.debug("Falha em %s", args.command, exc_info=True)
        print(f"curvecount: erro: {error.detail}", file=sys.stderr)
        return error.exit_code

    text = render(records, fmt)
    if text:
        print(text)
    return EXIT_OK
