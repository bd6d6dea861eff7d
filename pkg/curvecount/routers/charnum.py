# curvecount/routers/charnum.py

import argparse
import logging
import time
from typing import List, Optional

from curvecount.core.config import Settings
from curvecount.models.charnum import CharNumName, CharNumRecord, charnum
from curvecount.schemas.output import OutputRecord, elapsed_ms
from curvecount.schemas.requests import CharnumRequest

logger = logging.getLogger(__name__)


def register(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "charnum",
        parents=parents,
        help="Números característicos de curvas planas singulares",
    )
    parser.add_argument(
        "name",
        nargs="?",
        choices=[name.value for name in CharNumName],
        help="Linha da tabela (N1, N11, K1, K11, T1, N2, N21, K2, N3)",
    )
    parser.add_argument("--all", action="store_true", help="Todas as nove linhas")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--degree", type=int, help="Grau numérico d")
    target.add_argument("--symbolic", action="store_true", help="Polinômio em d")
    parser.set_defaults(handler=cmd_charnum)


def provenance_of(record: CharNumRecord) -> str:
    """Identificador do pipeline: Euler, fronteira e quociente por simetria."""
    label = f"pipeline.{record.name.value}"
    if record.corrections:
        label += "-boundary"
    if record.symmetry_order > 1:
        label += f"/{record.symmetry_order}"
    return label


def result_text(record: CharNumRecord) -> str:
    value = record.value
    return str(value.to_int()) if value.is_constant else str(value)


def charnum_output(
    command: str,
    name: CharNumName,
    degree: Optional[int],
    extra_inputs: Optional[dict] = None,
) -> OutputRecord:
    start = time.perf_counter()
    record = charnum(name, degree)
    inputs = dict(extra_inputs or {})
    inputs["name"] = name.value
    inputs["degree"] = "d" if degree is None else str(degree)
    return OutputRecord(
        command=command,
        inputs=inputs,
        result=result_text(record),
        provenance=provenance_of(record),
        elapsed_ms=elapsed_ms(start),
    )


def cmd_charnum(args, settings: Settings) -> List[OutputRecord]:
    """
    Calcular um número característico (ou as nove linhas).

    Raises:
        DegreeError: Grau abaixo do mínimo da linha
    """
    request = CharnumRequest(
        name=args.name,
        all=args.all,
        degree=args.degree,
        symbolic=args.symbolic,
    )
    degree = None if request.symbolic else request.degree
    logger.info("charnum %s em %s", "todas" if request.all else request.name.value, degree or "d")
    return [charnum_output("charnum", name, degree) for name in request.names()]
