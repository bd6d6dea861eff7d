# curvecount/routers/table.py

import argparse
import logging
import time
from typing import List

from curvecount.core.config import Settings
from curvecount.models.charnum import CharNumName, quartic_audit
from curvecount.routers.charnum import charnum_output
from curvecount.schemas.output import OutputRecord, elapsed_ms
from curvecount.schemas.requests import TableRequest

logger = logging.getLogger(__name__)

QUARTIC_DEGREE = 4


def register(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "table",
        parents=parents,
        help="Tabelas completas: quárticas ou grau d",
    )
    parser.add_argument("which", choices=["quartics", "general"], help="Qual tabela")
    parser.add_argument("--degree-range", help="Intervalo a..b (tabela geral)")
    parser.set_defaults(handler=cmd_table)


def _audit_records() -> List[OutputRecord]:
    start = time.perf_counter()
    audit = quartic_audit()
    spent = elapsed_ms(start)
    return [
        OutputRecord(
            command="table",
            inputs={"table": "quartics", "name": key},
            result=str(value),
            provenance="audit",
            elapsed_ms=spent,
        )
        for key, value in audit.items()
    ]


def cmd_table(args, settings: Settings) -> List[OutputRecord]:
    """
    Emitir as nove linhas por grau. `quartics` acrescenta o bloco de auditoria
    com os intermediários do cálculo em d = 4.
    """
    request = TableRequest(which=args.which, degree_range=args.degree_range)
    records: List[OutputRecord] = []

    if request.which == "quartics":
        for name in CharNumName:
            records.append(charnum_output("table", name, QUARTIC_DEGREE, {"table": "quartics"}))
        records.extend(_audit_records())
        return records

    for d in request.degree_range.degrees():
        logger.info("Tabela geral em d = %d", d)
        for name in CharNumName:
            records.append(charnum_output("table", name, d, {"table": "general"}))
    return records
