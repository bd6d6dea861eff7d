# curvecount/models/kontsevich.py

import enum
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from curvecount.core.errors import DegreeError, InconsistencyError, IntegralityError

logger = logging.getLogger(__name__)


# ============================================================================
# TABELA DE MEMORIZAÇÃO
# ============================================================================

class Provenance(str, enum.Enum):
    """Quem preencheu cada entrada da tabela."""
    BASE = "base"
    RECURSION = "recursion"
    UNSYM = "unsym"
    CACHE = "cache"


class MemoTable:
    """
    Tabela d -> n_d com proveniência.

    Escritas passam por um lock; leitores só enxergam entradas completas.
    Registrar um valor diferente do já existente é uma inconsistência.
    """

    def __init__(self):
        self._entries: Dict[int, int] = {1: 1}
        self._sources: Dict[int, Provenance] = {1: Provenance.BASE}
        self._lock = threading.Lock()

    def __contains__(self, d: int) -> bool:
        return d in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, d: int) -> Optional[int]:
        return self._entries.get(d)

    def source(self, d: int) -> Optional[Provenance]:
        return self._sources.get(d)

    def record(self, d: int, value: int, source: Provenance) -> int:
        """
        Gravar n_d. Se já existir, o valor precisa coincidir.

        Raises:
            InconsistencyError: Valor diferente do registrado por outra fonte
        """
        with self._lock:
            existing = self._entries.get(d)
            if existing is not None:
                if existing != value:
                    raise InconsistencyError(
                        f"n_{d}: {source.value} deu {value}, "
                        f"mas {self._sources[d].value} registrou {existing}"
                    )
                return existing
            self._entries[d] = value
            self._sources[d] = source
            return value

    def seed(self, values: Mapping[int, int]) -> None:
        """Carregar valores do cache (proveniência "cache")."""
        for d, value in sorted(values.items()):
            self.record(d, value, Provenance.CACHE)
        logger.info("Tabela semeada com %d valores do cache", len(values))

    def snapshot(self) -> Dict[int, int]:
        with self._lock:
            return dict(self._entries)

    def provenance(self) -> Dict[int, Provenance]:
        with self._lock:
            return dict(self._sources)


# Tabela compartilhada pelas duas fórmulas quando nenhuma é passada
default_table = MemoTable()


# ============================================================================
# COMBINATÓRIA
# ============================================================================

def binomial(n: int, k: int) -> int:
    """binom(n, k), zero fora de 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_degree(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int):
        raise DegreeError(f"Grau deve ser inteiro: {d!r}")
    if d < 1:
        raise DegreeError(f"Grau deve ser pelo menos 1 (recebido {d})", min_degree=1)


def _splits(d: int) -> List[Tuple[int, int]]:
    """(d1, d2) com d1 + d2 = d e d1, d2 >= 1."""
    return [(d1, d - d1) for d1 in range(1, d)]


# ============================================================================
# RECURSÕES
# ============================================================================

def _symmetric_step(d: int, n: Mapping[int, int]) -> int:
    total = Fraction(0)
    for d1, d2 in _splits(d):
        weight = Fraction(d1 * d2) - Fraction(2 * (d1 - d2) ** 2, 3 * d - 2)
        total += weight * binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 * n[d1] * n[d2]
    value = total / (6 * (d - 1))
    if value.denominator != 1:
        raise IntegralityError(f"A recursão simétrica deu {value} em d = {d}")
    return value.numerator


def _unsymmetric_step(d: int, n: Mapping[int, int]) -> int:
    total = 0
    for d1, d2 in _splits(d):
        total += (
            binomial(3 * d - 4, 3 * d1 - 2) * d1 * d2 - binomial(3 * d - 4, 3 * d1 - 1) * d1 * d1
        ) * d1 * d2 * n[d1] * n[d2]
    return total


def _run(d: int, table: MemoTable, step, source: Provenance) -> int:
    _check_degree(d)
    # Iterativo: evita recursão profunda em graus grandes
    for k in range(2, d + 1):
        if k in table:
            continue
        known = table.snapshot()
        value = step(k, known)
        table.record(k, value, source)
        logger.debug("n_%d = %d (%s)", k, value, source.value)
    return table.get(d)


def nd(d: int, table: Optional[MemoTable] = None) -> int:
    """
    n_d pela recursão simétrica com racionais exatos:
    n_d = 1/(6(d-1)) Σ (d1 d2 - 2(d1-d2)²/(3d-2)) binom(3d-2, 3d1-1) d1 d2 n_d1 n_d2.
    """
    return _run(d, default_table if table is None else table, _symmetric_step, Provenance.RECURSION)


def nd_unsym(d: int, table: Optional[MemoTable] = None) -> int:
    """
    n_d pela forma não simetrizada, só com inteiros:
    n_d = Σ (binom(3d-4, 3d1-2) d1 d2 - binom(3d-4, 3d1-1) d1²) d1 d2 n_d1 n_d2.
    """
    return _run(d, default_table if table is None else table, _unsymmetric_step, Provenance.UNSYM)


def sequence(up_to: int, table: Optional[MemoTable] = None) -> List[int]:
    """[n_1, ..., n_up_to]."""
    table = default_table if table is None else table
    nd(up_to, table)
    return [table.get(d) for d in range(1, up_to + 1)]


# ============================================================================
# CONTAGENS NA FRONTEIRA
# ============================================================================

class BoundarySide(str, enum.Enum):
    """Os dois divisores de fronteira usados: [1,0] e [0,1]."""
    ONE_ZERO = "[1,0]"
    ZERO_ONE = "[0,1]"


@dataclass(frozen=True)
class BoundaryCount:
    d: int
    side: BoundarySide
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise InconsistencyError(f"Contagem de fronteira negativa: {self.value}")


def boundary_terms(d: int, side: BoundarySide, table: Optional[MemoTable] = None) -> List[Tuple[int, int]]:
    """
    Contribuições (d1, valor) de cada divisão d = d1 + d2, já com os
    pesos de Bézout d1·d2. No lado [0,1] entra também o termo d1 = 0,
    que é o próprio n_d.
    """
    _check_degree(d)
    side = BoundarySide(side)
    table = default_table if table is None else table
    n = {k: nd(k, table) for k in range(1, d + 1)}
    terms: List[Tuple[int, int]] = []
    if side is BoundarySide.ZERO_ONE:
        terms.append((0, n[d]))
    for d1, d2 in _splits(d):
        if side is BoundarySide.ONE_ZERO:
            value = binomial(3 * d - 4, 3 * d1 - 2) * d1 ** 2 * d2 ** 2 * n[d1] * n[d2]
        else:
            value = binomial(3 * d - 4, 3 * d1 - 1) * d1 ** 3 * d2 * n[d1] * n[d2]
        terms.append((d1, value))
    return terms


def boundary(d: int, side: BoundarySide, table: Optional[MemoTable] = None) -> BoundaryCount:
    """N_d no divisor `side`."""
    side = BoundarySide(side)
    total = sum(value for _, value in boundary_terms(d, side, table))
    return BoundaryCount(d=d, side=side, value=total)
