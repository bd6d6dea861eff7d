# curvecount/models/graded_ring.py

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from curvecount.core.errors import RingError
from curvecount.models.degree import ONE, ZERO, DegreeCoeff

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Scalar = Union[int, DegreeCoeff]


# ============================================================================
# ESPECIFICAÇÃO DO ANEL
# ============================================================================

@dataclass(frozen=True)
class Nilpotent:
    """Relação g^order = 0 (classe hiperplano de P^(order-1))."""
    order: int


@dataclass(frozen=True)
class ProjBundle:
    """
    Relação de fibrado projetivizado de posto r = len(coefficients):
    λ^r = -(c1 λ^(r-1) + ... + cr).
    """
    coefficients: Tuple["CohClass", ...]

    @property
    def rank(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    relation: Union[Nilpotent, ProjBundle]

    @property
    def bound(self) -> int:
        """Primeiro expoente que a relação reescreve."""
        if isinstance(self.relation, Nilpotent):
            return self.relation.order
        return self.relation.rank


@dataclass(frozen=True)
class RingSpec:
    generators: Tuple[Generator, ...]


def projective_space(name: str, n: int) -> Generator:
    """Classe hiperplano de P^n."""
    return Generator(name=name, degree=1, relation=Nilpotent(order=n + 1))


def projective_bundle(name: str, coefficients: Iterable["CohClass"]) -> Generator:
    """λ = c1(γ*) sobre a projetivização de um fibrado com classes c1..cr."""
    return Generator(name=name, degree=1, relation=ProjBundle(tuple(coefficients)))


# ============================================================================
# ANEL
# ============================================================================

@dataclass(frozen=True, eq=False)
class Ring:
    """
    Anel graduado truncado. Criar sempre via make_ring, que valida os geradores.
    Igualdade e hash seguem a RingSpec.
    """

    spec: RingSpec
    names: Tuple[str, ...] = field(init=False)
    dimension: int = field(init=False)
    top_monomial: Monomial = field(init=False)

    def __post_init__(self):
        gens = self.spec.generators
        object.__setattr__(self, "names", tuple(g.name for g in gens))
        object.__setattr__(self, "dimension", sum((g.bound - 1) * g.degree for g in gens))
        object.__setattr__(self, "top_monomial", tuple(g.bound - 1 for g in gens))
        object.__setattr__(self, "_hash", hash(self.spec))
        object.__setattr__(self, "_rewrites", self._compile_rewrites())
        object.__setattr__(self, "_reduction_cache", {})

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.names)}; dim={self.dimension})"

    # ------------------------------------------------------------------

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self.spec.generators

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingError(f"Gerador '{name}' não existe em {self!r}") from None

    def generator(self, name: str) -> Generator:
        return self.spec.generators[self.index(name)]

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(monomial, self.spec.generators))

    def is_reduced(self, monomial: Monomial) -> bool:
        return all(e < g.bound for e, g in zip(monomial, self.spec.generators))

    def monomials(self, degree: int) -> List[Monomial]:
        """Monômios reduzidos de um grau dado, na ordem de declaração."""
        ranges = [range(g.bound) for g in self.spec.generators]
        return [m for m in itertools.product(*ranges) if self.monomial_degree(m) == degree]

    # ------------------------------------------------------------------
    # Construtores de classes
    # ------------------------------------------------------------------

    def zero(self) -> "CohClass":
        return CohClass(self, {})

    def one(self) -> "CohClass":
        return self.constant(1)

    def constant(self, value: Scalar) -> "CohClass":
        return CohClass(self, {self.zero_monomial: DegreeCoeff.coerce(value)})

    def gen(self, name: str) -> "CohClass":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return CohClass(self, {tuple(exps): ONE})

    def monomial(self, **exponents: int) -> "CohClass":
        exps = [0] * len(self.names)
        for name, value in exponents.items():
            exps[self.index(name)] = value
        return CohClass(self, {tuple(exps): ONE})

    @property
    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    # ------------------------------------------------------------------
    # Redução
    # ------------------------------------------------------------------

    def _compile_rewrites(self) -> Dict[int, List[Tuple[int, List[Tuple[Monomial, DegreeCoeff]]]]]:
        """Para cada gerador ProjBundle j: [(i, termos de c_i já neste anel)]."""
        rewrites = {}
        for j, g in enumerate(self.spec.generators):
            if isinstance(g.relation, ProjBundle):
                rewrites[j] = [
                    (i, list(_embed_terms(c, self).items()))
                    for i, c in enumerate(g.relation.coefficients, start=1)
                ]
        return rewrites

    def reduce_monomial(self, monomial: Monomial) -> Dict[Monomial, DegreeCoeff]:
        """
        Reescrever um monômio qualquer como combinação de monômios reduzidos.
        Primeiro as relações ProjBundle (do último gerador para o primeiro),
        depois a truncação nilpotente.
        """
        cached = self._reduction_cache.get(monomial)
        if cached is not None:
            return cached

        gens = self.spec.generators
        result: Dict[Monomial, DegreeCoeff] = {}
        pending = [(monomial, ONE)]
        while pending:
            exps, coeff = pending.pop()
            if any(
                isinstance(g.relation, Nilpotent) and e >= g.relation.order
                for e, g in zip(exps, gens)
            ):
                continue
            violating = None
            for j in reversed(list(self._rewrites)):
                if exps[j] >= gens[j].relation.rank:
                    violating = j
                    break
            if violating is None:
                total = result.get(exps, ZERO) + coeff
                if total:
                    result[exps] = total
                else:
                    result.pop(exps, None)
                continue
            # λ^k = λ^(k-r) * (-(c1 λ^(r-1) + ... + cr))
            for i, terms in self._rewrites[violating]:
                for base, weight in terms:
                    new = list(e + b for e, b in zip(exps, base))
                    new[violating] -= i
                    pending.append((tuple(new), -(coeff * weight)))

        self._reduction_cache[monomial] = result
        return result

    # ------------------------------------------------------------------
    # Derivados
    # ------------------------------------------------------------------

    def without(self, name: str) -> "Ring":
        """Anel base obtido retirando o gerador `name` (usado no pushforward)."""
        j = self.index(name)
        for g in self.spec.generators[j + 1:]:
            if isinstance(g.relation, ProjBundle) and any(
                name in c.ring.names for c in g.relation.coefficients
            ):
                raise RingError(f"O gerador '{g.name}' depende de '{name}'")
        gens = self.spec.generators[:j] + self.spec.generators[j + 1:]
        return make_ring(RingSpec(gens))


# ============================================================================
# CLASSES DE COHOMOLOGIA
# ============================================================================

class CohClass:
    """
    Elemento reduzido do anel: mapa monômio -> DegreeCoeff sem zeros.
    Imutável depois de construído.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        reduced: Dict[Monomial, DegreeCoeff] = {}
        for monomial, coeff in (terms or {}).items():
            if len(monomial) != len(ring.names):
                raise RingError(
                    f"Monômio {monomial} não tem {len(ring.names)} expoentes"
                )
            if any(e < 0 for e in monomial):
                raise RingError(f"Expoente negativo em {monomial}")
            coeff = DegreeCoeff.coerce(coeff)
            if not coeff:
                continue
            if ring.is_reduced(monomial):
                _accumulate(reduced, monomial, coeff)
            else:
                for m, w in ring.reduce_monomial(monomial).items():
                    _accumulate(reduced, m, coeff * w)
        self._terms = reduced
        self._hash = None

    @classmethod
    def _from_reduced(cls, ring: Ring, terms: Dict[Monomial, DegreeCoeff]) -> "CohClass":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, DegreeCoeff]:
        return dict(self._terms)

    def coefficient(self, monomial: Monomial) -> DegreeCoeff:
        return self._terms.get(tuple(monomial), ZERO)

    def degrees(self) -> List[int]:
        return sorted({self.ring.monomial_degree(m) for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Grau de uma classe homogênea não nula (None para zero)."""
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise RingError(f"Classe não homogênea: {self}")
        return degrees[0]

    def component(self, degree: int) -> "CohClass":
        return component(self, degree)

    def is_zero(self) -> bool:
        return not self._terms

    # ------------------------------------------------------------------

    def __add__(self, other) -> "CohClass":
        return add(self, _lift(self.ring, other))

    __radd__ = __add__

    def __sub__(self, other) -> "CohClass":
        return add(self, -_lift(self.ring, other))

    def __rsub__(self, other) -> "CohClass":
        return add(_lift(self.ring, other), -self)

    def __neg__(self) -> "CohClass":
        return CohClass._from_reduced(self.ring, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "CohClass":
        if isinstance(other, (int, DegreeCoeff)):
            return scale(self, other)
        if isinstance(other, CohClass):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "CohClass":
        if isinstance(other, (int, DegreeCoeff)):
            return scale(self, other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "CohClass":
        result = self.ring.one()
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms.items(),
            key=lambda item: (-self.ring.monomial_degree(item[0]), tuple(-e for e in item[0])),
        )
        pieces = []
        for index, (monomial, coeff) in enumerate(ordered):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, monomial)
                if e
            ]
            body, negative = _format_term(coeff, factors)
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"CohClass({self})"


def _format_term(coeff: DegreeCoeff, factors: List[str]) -> Tuple[str, bool]:
    if coeff.is_constant:
        value = coeff.to_int()
        magnitude, negative = abs(value), value < 0
        if not factors:
            return str(magnitude), negative
        if magnitude == 1:
            return "*".join(factors), negative
        return "*".join([str(magnitude)] + factors), negative
    text = f"({coeff})"
    return ("*".join([text] + factors) if factors else text), False


def _accumulate(terms: Dict[Monomial, DegreeCoeff], monomial: Monomial, coeff: DegreeCoeff) -> None:
    total = terms.get(monomial, ZERO) + coeff
    if total:
        terms[monomial] = total
    else:
        terms.pop(monomial, None)


def _lift(ring: Ring, value) -> CohClass:
    if isinstance(value, CohClass):
        return value
    if isinstance(value, (int, DegreeCoeff)):
        return ring.constant(value)
    raise TypeError(f"Não é possível somar {value!r} a uma classe")


def _check_same_ring(x: CohClass, y: CohClass) -> None:
    if x.ring != y.ring:
        raise RingError(f"Classes em anéis diferentes: {x.ring!r} e {y.ring!r}")


def _embed_terms(x: CohClass, target: Ring) -> Dict[Monomial, DegreeCoeff]:
    """Reescrever os monômios de x (por nome de gerador) no anel alvo."""
    positions = []
    for g in x.ring.generators:
        if g.name not in target.names:
            raise RingError(f"Gerador '{g.name}' ausente em {target!r}")
        if target.generator(g.name).degree != g.degree:
            raise RingError(f"Gerador '{g.name}' com grau diferente em {target!r}")
        positions.append(target.index(g.name))
    terms: Dict[Monomial, DegreeCoeff] = {}
    for monomial, coeff in x._terms.items():
        exps = [0] * len(target.names)
        for position, e in zip(positions, monomial):
            exps[position] = e
        terms[tuple(exps)] = coeff
    return terms


# ============================================================================
# OPERAÇÕES
# ============================================================================

def make_ring(spec: RingSpec) -> Ring:
    """
    Criar um anel a partir da RingSpec.

    Raises:
        RingError: Nome repetido, grau inválido ou coeficiente ProjBundle mal formado
    """
    seen: Dict[str, Generator] = {}
    for g in spec.generators:
        if g.name in seen:
            raise RingError(f"Gerador repetido: '{g.name}'")
        if g.degree < 1:
            raise RingError(f"Grau do gerador '{g.name}' deve ser positivo")
        if isinstance(g.relation, Nilpotent):
            if g.relation.order < 1:
                raise RingError(f"Ordem nilpotente de '{g.name}' deve ser positiva")
        elif isinstance(g.relation, ProjBundle):
            if g.degree != 1:
                raise RingError(f"Gerador de fibrado '{g.name}' deve ter grau 1")
            if g.relation.rank < 1:
                raise RingError(f"Fibrado de '{g.name}' precisa de posto positivo")
            for i, c in enumerate(g.relation.coefficients, start=1):
                for base in c.ring.generators:
                    if seen.get(base.name) != base:
                        raise RingError(
                            f"Coeficiente c{i} de '{g.name}' usa '{base.name}', "
                            f"que não é um gerador anterior"
                        )
                if not c.is_zero() and c.degrees() != [i]:
                    raise RingError(f"Coeficiente c{i} de '{g.name}' deve ter grau {i}: {c}")
        else:
            raise RingError(f"Relação desconhecida para '{g.name}'")
        seen[g.name] = g
    ring = Ring(spec)
    logger.debug("Anel criado: %r", ring)
    return ring


def add(x: CohClass, y: CohClass) -> CohClass:
    """Soma termo a termo."""
    _check_same_ring(x, y)
    terms = dict(x._terms)
    for monomial, coeff in y._terms.items():
        _accumulate(terms, monomial, coeff)
    return CohClass._from_reduced(x.ring, terms)


def scale(x: CohClass, factor: Scalar) -> CohClass:
    factor = DegreeCoeff.coerce(factor)
    if not factor:
        return x.ring.zero()
    return CohClass._from_reduced(x.ring, {m: c * factor for m, c in x._terms.items()})


def mul(x: CohClass, y: CohClass) -> CohClass:
    """Produto com todas as relações aplicadas."""
    _check_same_ring(x, y)
    ring = x.ring
    terms: Dict[Monomial, DegreeCoeff] = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            product = tuple(a + b for a, b in zip(m1, m2))
            coeff = c1 * c2
            if ring.is_reduced(product):
                _accumulate(terms, product, coeff)
            else:
                for m, w in ring.reduce_monomial(product).items():
                    _accumulate(terms, m, coeff * w)
    return CohClass._from_reduced(ring, terms)


def integrate(x: CohClass) -> DegreeCoeff:
    """Coeficiente do monômio de grau máximo (⟨x, [M]⟩)."""
    return x.coefficient(x.ring.top_monomial)


def component(x: CohClass, degree: int) -> CohClass:
    """Parte homogênea de grau `degree`."""
    ring = x.ring
    return CohClass._from_reduced(
        ring, {m: c for m, c in x._terms.items() if ring.monomial_degree(m) == degree}
    )


def pushforward(x: CohClass, name: str) -> CohClass:
    """
    Integração na fibra do gerador ProjBundle `name`: coeficiente de λ^(r-1),
    como classe no anel sem `name`.
    """
    ring = x.ring
    j = ring.index(name)
    g = ring.generators[j]
    if not isinstance(g.relation, ProjBundle):
        raise RingError(f"'{name}' não é um gerador de fibrado projetivo")
    base = ring.without(name)
    top = g.relation.rank - 1
    terms = {
        m[:j] + m[j + 1:]: c for m, c in x._terms.items() if m[j] == top
    }
    return CohClass._from_reduced(base, terms)


def embed(x: CohClass, ring: Ring) -> CohClass:
    """Ver a classe x em um anel que contém (por nome) os geradores de x.ring."""
    if x.ring == ring:
        return x
    return CohClass(ring, _embed_terms(x, ring))
