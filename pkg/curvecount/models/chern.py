# curvecount/models/chern.py

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Mapping, Optional

from curvecount.core.errors import BundleError, PairingError, RingError
from curvecount.models.degree import ZERO, DegreeCoeff
from curvecount.models.graded_ring import (
    CohClass,
    Monomial,
    Nilpotent,
    ProjBundle,
    Ring,
    Scalar,
    component,
    embed,
    integrate,
    pushforward,
)

logger = logging.getLogger(__name__)


# ============================================================================
# FIBRADOS FORMAIS
# ============================================================================

@dataclass(frozen=True)
class FormalBundle:
    """
    Fibrado formal: posto e classe de Chern total.
    A classe total tem termo constante 1 e nada acima do grau = posto.
    """

    rank: int
    chern: CohClass

    def __post_init__(self):
        if self.rank < 0:
            raise BundleError("Posto do fibrado deve ser não negativo")
        if component(self.chern, 0) != self.ring.one():
            raise BundleError(f"Classe de Chern total deve começar por 1: {self.chern}")
        for degree in self.chern.degrees():
            if degree > self.rank:
                raise BundleError(
                    f"Classe de Chern com componente de grau {degree} acima do posto {self.rank}"
                )

    @property
    def ring(self) -> Ring:
        return self.chern.ring

    def __str__(self) -> str:
        return f"FormalBundle(rank={self.rank}, c={self.chern})"


def line(c1: CohClass) -> FormalBundle:
    """Fibrado de linha com c1 dado."""
    if not c1.is_zero() and c1.degrees() != [1]:
        raise BundleError(f"c1 de um fibrado de linha deve ter grau 1: {c1}")
    return FormalBundle(rank=1, chern=c1.ring.one() + c1)


def trivial(ring: Ring, rank: int = 1) -> FormalBundle:
    return FormalBundle(rank=rank, chern=ring.one())


def tangent_bundle(ring: Ring, name: str, n: Optional[int] = None) -> FormalBundle:
    """
    TP^n pela classe hiperplano `name`: c = (1 + a)^(n+1).

    Com `n` maior que a dimensão do fator (ex.: TP² restrito a uma reta),
    a truncação do anel faz a restrição.
    """
    generator = ring.generator(name)
    if not isinstance(generator.relation, Nilpotent):
        raise BundleError(f"'{name}' não é a classe hiperplano de um espaço projetivo")
    if n is None:
        n = generator.relation.order - 1
    chern = (ring.one() + ring.gen(name)) ** (n + 1)
    return FormalBundle(rank=n, chern=chern)


def chern_class(E: FormalBundle, i: int) -> CohClass:
    """c_i(E) (zero fora de 0..posto)."""
    if i < 0 or i > E.rank:
        return E.ring.zero()
    return component(E.chern, i)


def dual(E: FormalBundle) -> FormalBundle:
    """c_i(E*) = (-1)^i c_i(E)."""
    chern = E.ring.zero()
    for i in range(E.rank + 1):
        c = chern_class(E, i)
        chern = chern + (-c if i % 2 else c)
    return FormalBundle(rank=E.rank, chern=chern)


def twist(E: FormalBundle, L: FormalBundle) -> FormalBundle:
    """E ⊗ L para L de posto 1: c_k = Σ binom(r-i, k-i) c_i(E) t^(k-i)."""
    if L.rank != 1:
        raise BundleError("Só é possível torcer por um fibrado de linha")
    _check_same_ring(E, L)
    t = chern_class(L, 1)
    r = E.rank
    chern = E.ring.zero()
    for k in range(r + 1):
        for i in range(k + 1):
            coeff = comb(r - i, k - i)
            if coeff:
                chern = chern + coeff * chern_class(E, i) * t ** (k - i)
    return FormalBundle(rank=r, chern=chern)


def direct_sum(E: FormalBundle, F: FormalBundle) -> FormalBundle:
    """Soma de Whitney."""
    _check_same_ring(E, F)
    return FormalBundle(rank=E.rank + F.rank, chern=E.chern * F.chern)


def euler(E: FormalBundle) -> CohClass:
    """Classe de Euler = c_posto."""
    return chern_class(E, E.rank)


def chern_inverse(E: FormalBundle) -> CohClass:
    """
    c(E)^(-1) no anel truncado, pela série geométrica em u = c(E) - 1.
    Não é um FormalBundle.
    """
    ring = E.ring
    u = E.chern - ring.one()
    result = ring.one()
    power = ring.one()
    # u não tem termo constante, então u^(dim+1) = 0
    for k in range(1, ring.dimension + 1):
        power = power * u
        if power.is_zero():
            break
        result = result + (-power if k % 2 else power)
    return result


def tensor_power(L: FormalBundle, k: int) -> FormalBundle:
    """L^⊗k para um fibrado de linha (k pode ser negativo)."""
    if L.rank != 1:
        raise BundleError("Potência tensorial só é suportada para fibrados de linha")
    return line(k * chern_class(L, 1))


def determinant(E: FormalBundle) -> FormalBundle:
    """Λ^posto E como fibrado de linha."""
    return line(chern_class(E, 1))


def _check_same_ring(E: FormalBundle, F: FormalBundle) -> None:
    if E.ring != F.ring:
        raise RingError(f"Fibrados em anéis diferentes: {E.ring!r} e {F.ring!r}")


# ============================================================================
# FUNCIONAIS DE CICLO
# ============================================================================

class CycleFunctional:
    """
    Pareamento ⟨·, C⟩ com um ciclo C de dimensão fixa, dado por pesos nos
    monômios reduzidos dessa dimensão. Monômios sem peso pareiam a zero.
    """

    __slots__ = ("ambient", "dimension", "_weights")

    def __init__(self, ambient: Ring, dimension: int, weights: Mapping[Monomial, Scalar]):
        if dimension < 0 or dimension > ambient.dimension:
            raise PairingError(
                f"Dimensão {dimension} inválida para um ciclo em {ambient!r}"
            )
        clean: Dict[Monomial, DegreeCoeff] = {}
        for monomial, weight in weights.items():
            if not ambient.is_reduced(monomial):
                raise PairingError(f"Monômio não reduzido como peso: {monomial}")
            if ambient.monomial_degree(monomial) != dimension:
                raise PairingError(
                    f"Peso em {monomial} com grau diferente da dimensão {dimension}"
                )
            weight = DegreeCoeff.coerce(weight)
            if weight:
                clean[monomial] = weight
        self.ambient = ambient
        self.dimension = dimension
        self._weights = clean

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @classmethod
    def from_weights(
        cls,
        ambient: Ring,
        weights: Mapping[CohClass, Scalar],
        dimension: Optional[int] = None,
    ) -> "CycleFunctional":
        """
        Pesos injetados, por exemplo {y: |N1|, a: |N11|}.
        As chaves são monômios (classes de um único termo com coeficiente 1).
        """
        by_monomial: Dict[Monomial, Scalar] = {}
        for key, weight in weights.items():
            terms = key.terms
            if len(terms) != 1 or list(terms.values())[0] != 1:
                raise PairingError(f"Chave de peso deve ser um monômio: {key}")
            (monomial,) = terms
            by_monomial[monomial] = weight
            if dimension is None:
                dimension = ambient.monomial_degree(monomial)
        if dimension is None:
            raise PairingError("Dimensão do ciclo não pode ser inferida sem pesos")
        return cls(ambient, dimension, by_monomial)

    @classmethod
    def from_poincare_dual(cls, ambient: Ring, pd: CohClass, dimension: int) -> "CycleFunctional":
        """Ciclo cortado transversalmente: peso(m) = ∫ m·PD."""
        if pd.ring != ambient:
            pd = embed(pd, ambient)
        weights = {
            m: integrate(_monomial(ambient, m) * pd)
            for m in ambient.monomials(dimension)
        }
        return cls(ambient, dimension, weights)

    # ------------------------------------------------------------------

    @property
    def weights(self) -> Dict[Monomial, DegreeCoeff]:
        return dict(self._weights)

    def weight(self, monomial: CohClass) -> DegreeCoeff:
        (key,) = monomial.terms
        return self._weights.get(key, ZERO)

    def pair(self, x: CohClass) -> DegreeCoeff:
        return pair(self, x)

    def cap(self, pd: CohClass) -> "CycleFunctional":
        """Restrição ao lugar de zeros de uma seção transversal com classe `pd`."""
        if pd.ring != self.ambient:
            pd = embed(pd, self.ambient)
        degree = pd.degree()
        if degree is None:
            return CycleFunctional(self.ambient, 0, {})
        new_dimension = self.dimension - degree
        if new_dimension < 0:
            raise PairingError(f"Classe {pd} de grau maior que a dimensão do ciclo")
        weights = {
            m: self.pair(_monomial(self.ambient, m) * pd)
            for m in self.ambient.monomials(new_dimension)
        }
        return CycleFunctional(self.ambient, new_dimension, weights)

    def cross(self, ring: Ring, name: str) -> "CycleFunctional":
        """Ciclo produto C × P^n, com P^n dado pelo gerador nilpotente `name`."""
        generator = ring.generator(name)
        if not isinstance(generator.relation, Nilpotent):
            raise RingError(f"'{name}' não é a classe hiperplano de um espaço projetivo")
        if name in self.ambient.names:
            raise RingError(f"'{name}' já pertence ao anel do ciclo")
        n = generator.relation.order - 1
        top = ring.gen(name) ** n
        weights: Dict[Monomial, DegreeCoeff] = {}
        for monomial, weight in self._weights.items():
            lifted = embed(_monomial(self.ambient, monomial), ring) * top
            (key,) = lifted.terms
            weights[key] = weight
        return CycleFunctional(ring, self.dimension + n * generator.degree, weights)

    def over_projectivization(self, ring: Ring, name: str) -> "CycleFunctional":
        """P(E)|_C: peso(m) = ⟨π_*(m), C⟩ com π_* a integração na fibra de `name`."""
        generator = ring.generator(name)
        if not isinstance(generator.relation, ProjBundle):
            raise RingError(f"'{name}' não é um gerador de fibrado projetivo")
        if ring.without(name) != self.ambient:
            raise RingError(f"{ring!r} não é uma projetivização sobre {self.ambient!r}")
        new_dimension = self.dimension + generator.relation.rank - 1
        weights = {
            m: self.pair(pushforward(_monomial(ring, m), name))
            for m in ring.monomials(new_dimension)
        }
        return CycleFunctional(ring, new_dimension, weights)

    def __repr__(self) -> str:
        return f"CycleFunctional({self.ambient!r}, dim={self.dimension}, {len(self._weights)} pesos)"


def _monomial(ring: Ring, monomial: Monomial) -> CohClass:
    return CohClass(ring, {monomial: 1})


def pair(f: CycleFunctional, x: CohClass) -> DegreeCoeff:
    """
    Σ peso(m)·coef(x, m). Termos de grau menor pareiam a zero.

    Raises:
        PairingError: Se x tiver componente não nula acima da dimensão do ciclo
    """
    if x.ring != f.ambient:
        x = embed(x, f.ambient)
    total = ZERO
    for monomial, coeff in x.terms.items():
        degree = f.ambient.monomial_degree(monomial)
        if degree > f.dimension:
            raise PairingError(
                f"Classe com componente de grau {degree} acima da dimensão {f.dimension}: {x}"
            )
        if degree == f.dimension:
            total = total + f._weights.get(monomial, ZERO) * coeff
    return total
