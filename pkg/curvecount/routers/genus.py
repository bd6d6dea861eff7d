# curvecount/routers/genus.py

import argparse
import time
from typing import List

from curvecount.core.config import Settings
from curvecount.models.charnum import genus_smooth
from curvecount.schemas.output import OutputRecord, elapsed_ms
from curvecount.schemas.requests import GenusRequest


def register(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "genus",
        parents=parents,
        help="Gênero de uma curva plana lisa de grau d",
    )
    parser.add_argument("--degree", type=int, required=True, help="Grau d")
    parser.set_defaults(handler=cmd_genus)


def cmd_genus(args, settings: Settings) -> List[OutputRecord]:
    request = GenusRequest(degree=args.degree)
    start = time.perf_counter()
    genus = genus_smooth(request.degree)
    return [
        OutputRecord(
            command="genus",
            inputs={"degree": str(request.degree)},
            result=str(genus),
            provenance="chern.euler_characteristic",
            elapsed_ms=elapsed_ms(start),
        )
    ]
