# curvecount/models/charnum.py

import enum
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple, Union

from curvecount.core.errors import DegreeError, InconsistencyError
from curvecount.models.chern import (
    CycleFunctional,
    FormalBundle,
    chern_class,
    chern_inverse,
    determinant,
    direct_sum,
    dual,
    euler,
    line,
    tangent_bundle,
    tensor_power,
    twist,
)
from curvecount.models.degree import ONE, DegreeCoeff
from curvecount.models.graded_ring import (
    Generator,
    Ring,
    RingSpec,
    component,
    integrate,
    make_ring,
    projective_bundle,
    projective_space,
)

logger = logging.getLogger(__name__)

Degree = Optional[int]  # None = execução simbólica


# ============================================================================
# NOMES E METADADOS
# ============================================================================

class CharNumName(str, enum.Enum):
    """Números característicos suportados."""
    N1 = "N1"
    N11 = "N11"
    K1 = "K1"
    K11 = "K11"
    T1 = "T1"
    N2 = "N2"
    N21 = "N21"
    K2 = "K2"
    N3 = "N3"


class ExcessName(str, enum.Enum):
    """Contagens N(α) de aplicações afins de fibrados."""
    NODE2 = "node2"
    NODE2_LINE = "node2_line"
    CUSP2 = "cusp2"
    NODE3 = "node3"


@dataclass(frozen=True)
class _RowInfo:
    singularities: str
    min_degree: int
    codimension: int

# singularidades, menor grau válido, co-# pontos
ROWS: Dict[CharNumName, _RowInfo] = {
    CharNumName.N1: _RowInfo("1 node", 1, 1),
    CharNumName.N11: _RowInfo("1 node on a fixed line", 1, 2),
    CharNumName.K1: _RowInfo("1 cusp", 1, 2),
    CharNumName.K11: _RowInfo("1 cusp on a fixed line", 3, 3),
    CharNumName.T1: _RowInfo("1 tacnode", 3, 3),
    CharNumName.N2: _RowInfo("2 nodes", 1, 2),
    CharNumName.N21: _RowInfo("2 nodes, one on a fixed line", 3, 3),
    CharNumName.K2: _RowInfo("1 node and 1 cusp", 3, 3),
    CharNumName.N3: _RowInfo("3 nodes", 3, 3),
}

EXCESS_MIN_DEGREE: Dict[ExcessName, int] = {
    ExcessName.NODE2: 1,
    ExcessName.NODE2_LINE: 3,
    ExcessName.CUSP2: 3,
    ExcessName.NODE3: 3,
}

# Multiplicidades dos modelos locais (não são re-derivadas aqui)
CUSP_POINT_MULTIPLICITY = 3  # cada cúspide conta 3 na fronteira de Ñ2
TACNODE_POINT_MULTIPLICITY = 4  # cada tacnódio conta 4 na fronteira de K2
TWO_TO_ONE = 2  # v -> v⊗v fora de γ^⊥
ORDERED_PAIRS = 2  # estratos de Ñ3 que aparecem com os dois índices
TACNODE_SYSTEM_SOLUTIONS = 2  # soluções pequenas sobre T1 no cálculo de N(node3)

# Quárticas por 11 pontos com nó num 12º ponto fixo: condições lineares
NODE_AT_FIXED_POINT = ONE

# Quocientes por simetria dos pontos singulares
S2_ORDER = 2
S3_ORDER = 6


# ============================================================================
# REGISTROS
# ============================================================================

@dataclass(frozen=True)
class CorrectionTerm:
    """Contribuição de um estrato da fronteira: multiplicidade × quantidade."""

    stratum: str
    multiplicity: int
    quantity: str
    value: DegreeCoeff

    def __post_init__(self):
        if self.multiplicity not in (1, 2, 3, 4, 6):
            raise ValueError(f"Multiplicidade inválida: {self.multiplicity}")

    @property
    def contribution(self) -> DegreeCoeff:
        return self.value * self.multiplicity


def _total(corrections: Tuple[CorrectionTerm, ...]) -> DegreeCoeff:
    total = DegreeCoeff.constant(0)
    for term in corrections:
        total = total + term.contribution
    return total


@dataclass(frozen=True)
class CharNumRecord:
    name: CharNumName
    min_degree: int
    value: DegreeCoeff
    singularities: str
    codimension: int
    euler_term: DegreeCoeff
    corrections: Tuple[CorrectionTerm, ...] = field(default_factory=tuple)
    symmetry_order: int = 1
    pre_quotient: Optional[DegreeCoeff] = None

    @property
    def boundary(self) -> DegreeCoeff:
        """Soma das correções de fronteira C_∂M."""
        return _total(self.corrections)

    def point_count(self, d: int) -> int:
        """Número de pontos em posição geral impostos às curvas de grau d."""
        return curve_space_dimension(d) - self.codimension


@dataclass(frozen=True)
class ExcessRecord:
    name: ExcessName
    integral: DegreeCoeff
    corrections: Tuple[CorrectionTerm, ...]
    value: DegreeCoeff

    @property
    def boundary(self) -> DegreeCoeff:
        return _total(self.corrections)


# ============================================================================
# ANÉIS USADOS PELOS CÁLCULOS
# ============================================================================

def _ring(*generators: Generator) -> Ring:
    return make_ring(RingSpec(tuple(generators)))


# y: sistema linear D ≈ P^k; a, a2, a3: fatores P²; lam: λ = c1(γ*) em PTP²
P2 = _ring(projective_space("a", 2))
P1_P2 = _ring(projective_space("y", 1), projective_space("a", 2))
P2_P1 = _ring(projective_space("y", 2), projective_space("a", 1))
P2_P2 = _ring(projective_space("y", 2), projective_space("a", 2))
P2_P2_P2 = _ring(projective_space("y", 2), projective_space("a", 2), projective_space("a2", 2))
P3_P2 = _ring(projective_space("y", 3), projective_space("a", 2))
P3_P2_P2 = _ring(projective_space("y", 3), projective_space("a", 2), projective_space("a2", 2))
P3_P2_P2_P2 = _ring(
    projective_space("y", 3),
    projective_space("a", 2),
    projective_space("a2", 2),
    projective_space("a3", 2),
)

_TP2_RELATION = (3 * P3_P2.gen("a"), 3 * P3_P2.gen("a") ** 2)
P3_P2_PT = _ring(
    projective_space("y", 3),
    projective_space("a", 2),
    projective_bundle("lam", _TP2_RELATION),
)
P3_P2_PT_P2 = _ring(
    projective_space("y", 3),
    projective_space("a", 2),
    projective_bundle("lam", _TP2_RELATION),
    projective_space("a2", 2),
)


# ============================================================================
# FIBRADOS DAS SEÇÕES
# ============================================================================

def _curve_line(ring: Ring, d: DegreeCoeff, hyperplane: str = "a") -> FormalBundle:
    """γ0* ⊗ γ^(*⊗d) pelo fator P² `hyperplane`."""
    return line(ring.gen("y") + ring.gen(hyperplane) * d)


def _node_bundle(ring: Ring, d: DegreeCoeff, hyperplane: str = "a") -> FormalBundle:
    """L ⊕ L⊗T*P²: valor e diferencial de s_a no ponto."""
    L = _curve_line(ring, d, hyperplane)
    cotangent = dual(tangent_bundle(ring, hyperplane, 2))
    return direct_sum(L, twist(cotangent, L))


def _affine_integrand(V: FormalBundle, E: FormalBundle, dimension: int):
    """Parte de grau `dimension` de c(V)·c(E)^(-1)."""
    return component(V.chern * chern_inverse(E), dimension)


def _as_coeff(d: Degree) -> DegreeCoeff:
    return DegreeCoeff.symbol() if d is None else DegreeCoeff.constant(d)


# ============================================================================
# UM PONTO SINGULAR (integrais de Euler puras)
# ============================================================================

@lru_cache(maxsize=None)
def _node_count(d: DegreeCoeff) -> DegreeCoeff:
    return integrate(euler(_node_bundle(P1_P2, d)))


@lru_cache(maxsize=None)
def _node_on_line_count(d: DegreeCoeff) -> DegreeCoeff:
    return integrate(euler(_node_bundle(P2_P1, d)))


@lru_cache(maxsize=None)
def _nodal_cycle(d: DegreeCoeff) -> CycleFunctional:
    """N1' ⊂ P²×P²: ⟨y⟩ = |N1|, ⟨a⟩ = |N11|."""
    y, a = P2_P2.gen("y"), P2_P2.gen("a")
    return CycleFunctional.from_weights(
        P2_P2, {y: _node_count(d), a: _node_on_line_count(d)}
    )


@lru_cache(maxsize=None)
def _nodal_surface(d: DegreeCoeff) -> CycleFunctional:
    """N1'' ⊂ P³×P²: ⟨y²⟩ = |N1|, ⟨ya⟩ = |N11|, ⟨a²⟩ = 1."""
    y, a = P3_P2.gen("y"), P3_P2.gen("a")
    return CycleFunctional.from_weights(
        P3_P2,
        {y ** 2: _node_count(d), y * a: _node_on_line_count(d), a ** 2: NODE_AT_FIXED_POINT},
    )


@lru_cache(maxsize=None)
def _nodal_cycle_on_line(d: DegreeCoeff) -> CycleFunctional:
    """N11' = N1'' cortado pela reta fixa."""
    return _nodal_surface(d).cap(P3_P2.gen("a"))


def _hessian_determinant(ring: Ring, d: DegreeCoeff) -> FormalBundle:
    """(L ⊗ Λ²T*P²)^⊗2, onde vive det H."""
    L = _curve_line(ring, d)
    canonical = determinant(dual(tangent_bundle(ring, "a", 2)))
    return tensor_power(twist(canonical, L), 2)


@lru_cache(maxsize=None)
def _cusp_count(d: DegreeCoeff) -> DegreeCoeff:
    return _nodal_cycle(d).pair(euler(_hessian_determinant(P2_P2, d)))


@lru_cache(maxsize=None)
def _cusp_on_line_count(d: DegreeCoeff) -> DegreeCoeff:
    return _nodal_cycle_on_line(d).pair(euler(_hessian_determinant(P3_P2, d)))


def _tautological_dual(ring: Ring) -> FormalBundle:
    return line(ring.gen("lam"))


@lru_cache(maxsize=None)
def _cuspidal_cycle(d: DegreeCoeff) -> CycleFunctional:
    """K1' ⊂ PTP²|N1'': zeros de H̃ ∈ Hom(γ, L⊗T*P²)."""
    ring = P3_P2_PT
    over = _nodal_surface(d).over_projectivization(ring, "lam")
    L = _curve_line(ring, d)
    hessian_target = twist(twist(dual(tangent_bundle(ring, "a", 2)), _tautological_dual(ring)), L)
    return over.cap(euler(hessian_target))


@lru_cache(maxsize=None)
def _tacnode_count(d: DegreeCoeff) -> DegreeCoeff:
    ring = P3_P2_PT
    third_derivative = twist(tensor_power(_tautological_dual(ring), 3), _curve_line(ring, d))
    return _cuspidal_cycle(d).pair(euler(third_derivative))


# ============================================================================
# CONTAGENS N(α)
# ============================================================================

@lru_cache(maxsize=None)
def _excess_record(name: ExcessName, d: DegreeCoeff) -> ExcessRecord:
    if name is ExcessName.NODE2:
        cycle = _nodal_cycle(d)
        integrand = _affine_integrand(
            _node_bundle(P2_P2, d), tangent_bundle(P2_P2, "a"), cycle.dimension
        )
        corrections = (CorrectionTerm("H̃ = 0", 1, "K1", _cusp_count(d)),)
    elif name is ExcessName.NODE2_LINE:
        cycle = _nodal_cycle_on_line(d)
        integrand = _affine_integrand(
            _node_bundle(P3_P2, d), tangent_bundle(P3_P2, "a"), cycle.dimension
        )
        corrections = (CorrectionTerm("H̃ = 0", 1, "K11", _cusp_on_line_count(d)),)
    elif name is ExcessName.CUSP2:
        ring = P3_P2_PT
        cycle = _cuspidal_cycle(d)
        L = _curve_line(ring, d)
        source = tensor_power(dual(_tautological_dual(ring)), 2)
        target = direct_sum(L, twist(L, _tautological_dual(ring)))
        integrand = _affine_integrand(target, source, cycle.dimension)
        corrections = (CorrectionTerm("D³ = 0", 1, "T1", _tacnode_count(d)),)
    elif name is ExcessName.NODE3:
        cycle = _two_node_cycle(d)
        integrand = _affine_integrand(
            _node_bundle(P3_P2_P2, d), tangent_bundle(P3_P2_P2, "a"), cycle.dimension
        )
        corrections = (
            CorrectionTerm("Z01", 1, "K2", _charnum_record(CharNumName.K2, d).value),
            CorrectionTerm("Z02", TACNODE_SYSTEM_SOLUTIONS, "T1", _tacnode_count(d)),
        )
    else:
        raise ValueError(f"Contagem N(α) desconhecida: {name}")

    integral = cycle.pair(integrand)
    value = integral - _total(corrections)
    logger.debug("N(%s) em d=%s: integral=%s, fronteira=%s, valor=%s",
                 name.value, d, integral, _total(corrections), value)
    return ExcessRecord(name=name, integral=integral, corrections=corrections, value=value)


@lru_cache(maxsize=None)
def _two_node_cycle(d: DegreeCoeff) -> CycleFunctional:
    """
    Ñ2' ⊂ P³×P²×P²: o corte não é transversal, então os pesos vêm dos
    números já calculados: ⟨y⟩ = 2|N2|, ⟨a⟩ = ⟨a2⟩ = |N21|.
    """
    ring = P3_P2_P2
    two_nodes = _charnum_record(CharNumName.N2, d).value
    on_line = _charnum_record(CharNumName.N21, d).value
    return CycleFunctional.from_weights(
        ring,
        {ring.gen("y"): two_nodes * 2, ring.gen("a"): on_line, ring.gen("a2"): on_line},
    )


# ============================================================================
# PIPELINES DOS NÚMEROS CARACTERÍSTICOS
# ============================================================================

def _second_node_term(cycle: CycleFunctional, ring: Ring, hyperplane: str, d: DegreeCoeff) -> DegreeCoeff:
    """⟨e(L_k ⊕ L_k⊗T*P²_k), C × P²_k⟩."""
    product = cycle.cross(ring, hyperplane)
    return product.pair(euler(_node_bundle(ring, d, hyperplane)))


def _single(name: CharNumName, value: DegreeCoeff) -> CharNumRecord:
    row = ROWS[name]
    return CharNumRecord(
        name=name,
        min_degree=row.min_degree,
        value=value,
        singularities=row.singularities,
        codimension=row.codimension,
        euler_term=value,
        pre_quotient=value,
    )


def _with_boundary(
    name: CharNumName,
    euler_term: DegreeCoeff,
    corrections: Tuple[CorrectionTerm, ...],
    symmetry_order: int = 1,
) -> CharNumRecord:
    row = ROWS[name]
    pre_quotient = euler_term - _total(corrections)
    value = pre_quotient if symmetry_order == 1 else pre_quotient.exact_div(symmetry_order)
    logger.debug(
        "%s: termo de Euler=%s, fronteira=%s, antes do quociente=%s, |S|=%s, valor=%s",
        name.value, euler_term, _total(corrections), pre_quotient, symmetry_order, value,
    )
    return CharNumRecord(
        name=name,
        min_degree=row.min_degree,
        value=value,
        singularities=row.singularities,
        codimension=row.codimension,
        euler_term=euler_term,
        corrections=corrections,
        symmetry_order=symmetry_order,
        pre_quotient=pre_quotient,
    )


@lru_cache(maxsize=None)
def _charnum_record(name: CharNumName, d: DegreeCoeff) -> CharNumRecord:
    if name is CharNumName.N1:
        return _single(name, _node_count(d))
    if name is CharNumName.N11:
        return _single(name, _node_on_line_count(d))
    if name is CharNumName.K1:
        return _single(name, _cusp_count(d))
    if name is CharNumName.K11:
        return _single(name, _cusp_on_line_count(d))
    if name is CharNumName.T1:
        return _single(name, _tacnode_count(d))

    if name is CharNumName.N2:
        euler_term = _second_node_term(_nodal_cycle(d), P2_P2_P2, "a2", d)
        corrections = (
            CorrectionTerm("Z1", 1, "N(node2)", _excess_record(ExcessName.NODE2, d).value),
            CorrectionTerm("Z0", CUSP_POINT_MULTIPLICITY, "K1", _cusp_count(d)),
        )
        return _with_boundary(name, euler_term, corrections, S2_ORDER)

    if name is CharNumName.N21:
        euler_term = _second_node_term(_nodal_cycle_on_line(d), P3_P2_P2, "a2", d)
        corrections = (
            CorrectionTerm("Z1", 1, "N(node2_line)", _excess_record(ExcessName.NODE2_LINE, d).value),
            CorrectionTerm("Z0", CUSP_POINT_MULTIPLICITY, "K11", _cusp_on_line_count(d)),
        )
        return _with_boundary(name, euler_term, corrections)

    if name is CharNumName.K2:
        euler_term = _second_node_term(_cuspidal_cycle(d), P3_P2_PT_P2, "a2", d)
        corrections = (
            CorrectionTerm("Z1", TWO_TO_ONE, "N(cusp2)", _excess_record(ExcessName.CUSP2, d).value),
            CorrectionTerm("Z0", TACNODE_POINT_MULTIPLICITY, "T1", _tacnode_count(d)),
        )
        return _with_boundary(name, euler_term, corrections)

    if name is CharNumName.N3:
        # Em grau >= 5 o termo extra de ordem 5 do modelo local se anula.
        euler_term = _second_node_term(_two_node_cycle(d), P3_P2_P2_P2, "a3", d)
        corrections = (
            CorrectionTerm("Z11", ORDERED_PAIRS, "N(node3)", _excess_record(ExcessName.NODE3, d).value),
            CorrectionTerm(
                "Z01",
                ORDERED_PAIRS * CUSP_POINT_MULTIPLICITY,
                "K2",
                _charnum_record(CharNumName.K2, d).value,
            ),
            CorrectionTerm("Z012", TACNODE_POINT_MULTIPLICITY, "T1", _tacnode_count(d)),
        )
        return _with_boundary(name, euler_term, corrections, S3_ORDER)

    raise ValueError(f"Número característico desconhecido: {name}")


# ============================================================================
# OPERAÇÕES PÚBLICAS
# ============================================================================

def _check_degree(d: Degree, min_degree: int, label: str) -> None:
    if d is None:
        return
    if isinstance(d, bool) or not isinstance(d, int):
        raise DegreeError(f"Grau deve ser inteiro: {d!r}")
    if d < 1:
        raise DegreeError(f"Grau deve ser pelo menos 1 (recebido {d})", min_degree=1)
    if d < min_degree:
        raise DegreeError(
            f"A fórmula de {label} só vale para d >= {min_degree} (recebido {d})",
            min_degree=min_degree,
        )


def charnum(name: Union[CharNumName, str], d: Degree = None) -> CharNumRecord:
    """
    Número característico `name` em grau d, ou como polinômio em d se d for None.

    Raises:
        DegreeError: d abaixo do menor grau da linha
        NonExactDivisionError: quociente por simetria não inteiro
    """
    name = CharNumName(name)
    _check_degree(d, ROWS[name].min_degree, name.value)
    record = _charnum_record(name, _as_coeff(d))
    logger.debug("charnum(%s, %s) = %s", name.value, "d" if d is None else d, record.value)
    return record


def charnum_all(d: Degree = None) -> List[CharNumRecord]:
    """As nove linhas, na ordem da tabela (numérico exige d >= 3)."""
    return [charnum(name, d) for name in CharNumName]


def excess_record(name: Union[ExcessName, str], d: Degree = None) -> ExcessRecord:
    name = ExcessName(name)
    _check_degree(d, EXCESS_MIN_DEGREE[name], f"N({name.value})")
    return _excess_record(name, _as_coeff(d))


def excess(name: Union[ExcessName, str], d: Degree = None) -> DegreeCoeff:
    """Contagem N(α) = ⟨c(V)c(E)^(-1), ciclo⟩ menos as próprias correções."""
    return excess_record(name, d).value


def curve_space_dimension(d: int) -> int:
    """dim das curvas de grau d = d(d+3)/2."""
    return d * (d + 3) // 2


def euler_characteristic(d: Degree = None) -> DegreeCoeff:
    """χ de uma curva lisa de grau d: ⟨(c1(TP²) - c1(L))·e(L), P²⟩ com L = γ^(*⊗d)."""
    _check_degree(d, 1, "χ")
    ring = P2
    L = line(ring.gen("a") * _as_coeff(d))
    tangent = tangent_bundle(ring, "a")
    return integrate((chern_class(tangent, 1) - chern_class(L, 1)) * euler(L))


def genus_smooth(d: int) -> int:
    """Gênero de uma curva plana lisa de grau d."""
    _check_degree(d, 1, "gênero")
    chi = euler_characteristic(d).to_int()
    if chi != 3 * d - d * d:
        raise InconsistencyError(f"χ = {chi} difere de 3d - d² em d = {d}")
    genus = (2 - chi) // 2
    if genus != comb(d - 1, 2):
        raise InconsistencyError(f"Gênero {genus} difere de binom(d-1, 2) em d = {d}")
    return genus


def nd_classical(d: int) -> int:
    """
    n_d pela rota clássica, 1 <= d <= 4.

    d = 1, 2: sistemas lineares (uma reta por 2 pontos, uma cônica por 5).
    d = 3: cúbicas nodais por 8 pontos, ⟨(3ya+3a²)(y+3a), D×P²⟩.
    d = 4: quárticas com três nós menos cúbica + reta por 11 pontos.
    """
    if isinstance(d, bool) or not isinstance(d, int) or not 1 <= d <= 4:
        raise DegreeError(f"A rota clássica só cobre 1 <= d <= 4 (recebido {d!r})")
    if d in (1, 2):
        return 1
    if d == 3:
        return _node_count(DegreeCoeff.constant(3)).to_int()
    three_nodes = charnum(CharNumName.N3, 4).value.to_int()
    # cúbica pelos 9 pontos escolhidos e reta pelos 2 restantes
    reducible = comb(11, 2) * 1 * 1
    return three_nodes - reducible


def quartic_audit() -> Dict[str, int]:
    """Intermediários do cálculo das quárticas, na ordem em que aparecem."""
    d = 4
    audit: Dict[str, int] = {}
    for name in ExcessName:
        audit[f"excess.{name.value}"] = excess(name, d).to_int()
    for name in (CharNumName.N2, CharNumName.N21, CharNumName.K2, CharNumName.N3):
        audit[f"boundary.{name.value}"] = charnum(name, d).boundary.to_int()
    for name in (CharNumName.N2, CharNumName.N3):
        audit[f"pre_quotient.{name.value}"] = charnum(name, d).pre_quotient.to_int()
    return audit
