# curvecount/routers/nd.py

import argparse
import logging
import time
from pathlib import Path
from typing import Dict, List, Optional

from curvecount.core.cache import load_cache, save_cache
from curvecount.core.config import Settings
from curvecount.core.errors import InconsistencyError
from curvecount.models.charnum import nd_classical
from curvecount.models.kontsevich import MemoTable, Provenance, nd, nd_unsym
from curvecount.schemas.output import OutputRecord, elapsed_ms
from curvecount.schemas.requests import NdRequest

logger = logging.getLogger(__name__)

CLASSICAL_MAX_DEGREE = 4


def register(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "nd",
        parents=parents,
        help="Número de curvas racionais de grau d por 3d-1 pontos",
    )
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--degree", type=int, help="Grau d")
    target.add_argument("--degree-range", help="Intervalo de graus a..b")
    parser.add_argument(
        "--method",
        choices=["recursion", "unsym", "classical", "all"],
        default="recursion",
        help="Fórmula usada (padrão: recursion)",
    )
    parser.set_defaults(handler=cmd_nd)


def _cache_path(args, settings: Settings) -> Optional[Path]:
    return args.cache if args.cache is not None else settings.CURVECOUNT_CACHE


def _record(d: int, method: str, value: int, provenance: str, start: float) -> OutputRecord:
    return OutputRecord(
        command="nd",
        inputs={"degree": str(d), "method": method},
        result=str(value),
        provenance=provenance,
        elapsed_ms=elapsed_ms(start),
    )


def cmd_nd(args, settings: Settings) -> List[OutputRecord]:
    """
    Calcular n_d por um ou mais métodos.

    Com --method all, cada método aplicável gera um registro e qualquer
    divergência entre eles é uma inconsistência.

    Raises:
        InconsistencyError: Métodos discordam ou o cache contradiz a recursão
        CacheError: Cache corrompido
    """
    request = NdRequest(
        degree=args.degree,
        degree_range=args.degree_range,
        method=args.method,
        max_degree=settings.CURVECOUNT_MAX_DEGREE,
    )
    methods = ["recursion", "unsym", "classical"] if request.method == "all" else [request.method]

    cache_path = _cache_path(args, settings)
    table = MemoTable()
    if cache_path is not None:
        table.seed(load_cache(cache_path))
    # a forma não simetrizada roda numa tabela própria para servir de oráculo
    unsym_table = MemoTable()

    records: List[OutputRecord] = []
    for d in request.degrees():
        values: Dict[str, int] = {}
        for method in methods:
            if method == "classical" and d > CLASSICAL_MAX_DEGREE:
                logger.info("Rota clássica não se aplica a d = %d; pulando", d)
                continue
            start = time.perf_counter()
            if method == "recursion":
                value = nd(d, table)
                provenance = table.source(d).value
            elif method == "unsym":
                value = nd_unsym(d, unsym_table)
                provenance = Provenance.UNSYM.value
            else:
                value = nd_classical(d)
                provenance = "classical"
            values[method] = value
            records.append(_record(d, method, value, provenance, start))

        if len(set(values.values())) > 1:
            detail = ", ".join(f"{m}={v}" for m, v in values.items())
            raise InconsistencyError(f"Métodos discordam em d = {d}: {detail}")

    if cache_path is not None and "recursion" in methods:
        save_cache(cache_path, table.snapshot())

    return records
