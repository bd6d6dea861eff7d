import importlib

import pytest

from curvecount.core.errors import BundleError, PairingError, RingError
charnum_module = importlib.import_module("curvecount.models.charnum")
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
    pair,
    tangent_bundle,
    tensor_power,
    trivial,
    twist,
)
from curvecount.models.degree import D, DegreeCoeff
from curvecount.models.graded_ring import integrate


@pytest.fixture
def nodal_functional_d4(p2_p2):
    """N1' em d = 4: ⟨y⟩ = 27, ⟨a⟩ = 9."""
    return CycleFunctional.from_weights(p2_p2, {p2_p2.gen("y"): 27, p2_p2.gen("a"): 9})


@pytest.fixture
def nodal_surface_d4(p3_p2):
    """N1'' em d = 4: ⟨y²⟩ = 27, ⟨ya⟩ = 9, ⟨a²⟩ = 1."""
    y, a = p3_p2.gen("y"), p3_p2.gen("a")
    return CycleFunctional.from_weights(p3_p2, {y ** 2: 27, y * a: 9, a ** 2: 1})


class TestFormalBundle:
    """Testes para construção de fibrados."""

    def test_line(self, p2_p2):
        """Testar line(y + 4a) com c = 1 + y + 4a."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        L = line(y + 4 * a)
        assert L.rank == 1
        assert L.chern == 1 + y + 4 * a

    def test_line_zero_is_trivial(self, p2_p2):
        """Testar line(0) = fibrado trivial."""
        assert line(p2_p2.zero()).chern == p2_p2.one()

    def test_symbolic_line(self):
        """Testar line(da) em P²."""
        P2 = charnum_module.P2
        assert euler(line(D * P2.gen("a"))) == D * P2.gen("a")

    def test_line_wrong_degree(self, p2_p2):
        """Testar c1 de grau 2."""
        with pytest.raises(BundleError):
            line(p2_p2.gen("a") ** 2)

    def test_chern_above_rank(self, p2_p2):
        """Testar classe com componente acima do posto."""
        a = p2_p2.gen("a")
        with pytest.raises(BundleError):
            FormalBundle(rank=1, chern=1 + a + a ** 2)

    def test_chern_must_start_with_one(self, p2_p2):
        """Testar classe total sem termo constante 1."""
        with pytest.raises(BundleError):
            FormalBundle(rank=1, chern=2 + p2_p2.gen("a"))

    def test_tangent_bundle(self):
        """Testar c(TP²) = 1 + 3a + 3a²."""
        P2 = charnum_module.P2
        a = P2.gen("a")
        T = tangent_bundle(P2, "a")
        assert T.rank == 2
        assert T.chern == 1 + 3 * a + 3 * a ** 2

    def test_tangent_restricted_to_line(self):
        """Testar TP²|P¹: a truncação deixa 1 + 3a."""
        ring = charnum_module.P2_P1
        a = ring.gen("a")
        assert tangent_bundle(ring, "a", 2).chern == 1 + 3 * a


class TestDual:
    """Testes para o dual."""

    def test_cotangent(self):
        """Testar c(T*P²) = 1 - 3a + 3a²."""
        P2 = charnum_module.P2
        a = P2.gen("a")
        assert dual(tangent_bundle(P2, "a")).chern == 1 - 3 * a + 3 * a ** 2

    def test_involution(self, p2_p2):
        """Testar dual(dual(E)) = E."""
        E = direct_sum(line(p2_p2.gen("y")), tangent_bundle(p2_p2, "a"))
        assert dual(dual(E)) == E

    def test_trivial(self, p2_p2):
        """Testar dual do trivial."""
        assert dual(trivial(p2_p2, 2)) == trivial(p2_p2, 2)


class TestTwist:
    """Testes para E ⊗ L."""

    def test_cotangent_twist(self, p2_p2):
        """Testar T*P² ⊗ (y + 4a): c1 = 2y + 5a, c2 = y² + 5ya + 7a²."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        twisted = twist(dual(tangent_bundle(p2_p2, "a")), line(y + 4 * a))
        assert chern_class(twisted, 1) == 2 * y + 5 * a
        assert chern_class(twisted, 2) == y ** 2 + 5 * y * a + 7 * a ** 2

    def test_symbolic_cotangent_twist(self, p2_p2):
        """Testar c2 = y² + (2d-3)ya + (d²-3d+3)a²."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        twisted = twist(dual(tangent_bundle(p2_p2, "a")), line(y + D * a))
        expected = y ** 2 + (2 * D - 3) * y * a + (D ** 2 - 3 * D + 3) * a ** 2
        assert chern_class(twisted, 2) == expected

    def test_twist_by_trivial(self, p2_p2):
        """Testar E ⊗ O = E."""
        E = tangent_bundle(p2_p2, "a")
        assert twist(E, trivial(p2_p2)) == E

    def test_twist_composition(self, p2_p2):
        """Testar (E ⊗ L) ⊗ M = E ⊗ (L ⊗ M)."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        E = tangent_bundle(p2_p2, "a")
        L, M = line(y), line(2 * a)
        assert twist(twist(E, L), M) == twist(E, line(y + 2 * a))

    def test_twist_by_non_line(self, p2_p2):
        """Testar torção por fibrado de posto 2."""
        E = tangent_bundle(p2_p2, "a")
        with pytest.raises(BundleError):
            twist(E, E)

    def test_ring_mismatch(self, p2_p2, p3_p2):
        """Testar fibrados em anéis diferentes."""
        with pytest.raises(RingError):
            direct_sum(line(p2_p2.gen("y")), line(p3_p2.gen("y")))


class TestWhitneyAndEuler:
    """Testes para soma direta, Euler e inversa."""

    def test_whitney(self, p2_p2):
        """Testar c(E ⊕ F) = c(E)c(F)."""
        E = tangent_bundle(p2_p2, "a")
        F = line(p2_p2.gen("y"))
        total = direct_sum(E, F)
        assert total.rank == 3
        assert total.chern == E.chern * F.chern

    def test_sum_with_rank_zero(self, p2_p2):
        """Testar E ⊕ 0 = E."""
        E = tangent_bundle(p2_p2, "a")
        assert direct_sum(E, trivial(p2_p2, 0)) == E

    def test_nodal_cubics(self, p1_p2):
        """Testar ∫ e(L ⊕ L⊗T*P²) = 12 em P¹ × P² para d = 3."""
        y, a = p1_p2.gen("y"), p1_p2.gen("a")
        L = line(y + 3 * a)
        V = direct_sum(L, twist(dual(tangent_bundle(p1_p2, "a")), L))
        assert integrate(euler(V)) == 12

    def test_euler_of_trivial(self, p2_p2):
        """Testar e(trivial) = 0."""
        assert euler(trivial(p2_p2, 2)).is_zero()

    def test_euler_of_line(self, p2_p2):
        """Testar e(line(y + da)) = y + da."""
        x = p2_p2.gen("y") + D * p2_p2.gen("a")
        assert euler(line(x)) == x

    def test_chern_inverse(self, p2_p2):
        """Testar c(E)·c(E)^(-1) = 1."""
        E = direct_sum(tangent_bundle(p2_p2, "a"), line(p2_p2.gen("y") + D * p2_p2.gen("a")))
        assert E.chern * chern_inverse(E) == p2_p2.one()

    def test_chern_inverse_of_trivial(self, p2_p2):
        """Testar c(trivial)^(-1) = 1."""
        assert chern_inverse(trivial(p2_p2, 3)) == p2_p2.one()

    def test_twist_round_trip(self, p2_p2):
        """Testar (E ⊗ L) ⊗ L* = E com L simbólico em d."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        L = line(y + D * a)
        for E in (tangent_bundle(p2_p2, "a"), direct_sum(line(y), dual(tangent_bundle(p2_p2, "a")))):
            assert twist(twist(E, L), dual(L)) == E

    def test_tensor_power_and_determinant(self, p2_p2):
        """Testar L^⊗k e Λ²T*P²."""
        a = p2_p2.gen("a")
        assert tensor_power(line(a), 3).chern == 1 + 3 * a
        assert tensor_power(line(a), -2).chern == 1 - 2 * a
        assert determinant(dual(tangent_bundle(p2_p2, "a"))).chern == 1 - 3 * a


class TestCycleFunctional:
    """Testes para funcionais de ciclo."""

    def test_pair_surface(self, p3_p2, nodal_surface_d4):
        """Testar ⟨5y² + 7ya + 2a², N1''⟩ = 200."""
        y, a = p3_p2.gen("y"), p3_p2.gen("a")
        assert nodal_surface_d4.pair(5 * y ** 2 + 7 * y * a + 2 * a ** 2) == 200

    def test_pair_curve(self, p2_p2, nodal_functional_d4):
        """Testar ⟨3y + 6a, N1'⟩ = 135."""
        y, a = p2_p2.gen("y"), p2_p2.gen("a")
        assert pair(nodal_functional_d4, 3 * y + 6 * a) == 135

    def test_pair_zero(self, p2_p2, nodal_functional_d4):
        """Testar que o zero pareia a zero."""
        assert nodal_functional_d4.pair(p2_p2.zero()) == 0

    def test_lower_degree_pairs_to_zero(self, p2_p2, nodal_functional_d4):
        """Testar termos de grau menor."""
        assert nodal_functional_d4.pair(p2_p2.one() + p2_p2.gen("y")) == 27

    def test_higher_degree_is_error(self, p2_p2, nodal_functional_d4):
        """Testar termo de grau acima da dimensão."""
        with pytest.raises(PairingError):
            nodal_functional_d4.pair(p2_p2.gen("y") * p2_p2.gen("a"))

    def test_weight_keys_must_be_monomials(self, p2_p2):
        """Testar chave que não é monômio."""
        with pytest.raises(PairingError):
            CycleFunctional.from_weights(p2_p2, {2 * p2_p2.gen("y"): 1})

    def test_cap(self, p3_p2, nodal_surface_d4):
        """Testar N11' = N1'' ∩ {a}: ⟨y⟩ = 9, ⟨a⟩ = 1."""
        capped = nodal_surface_d4.cap(p3_p2.gen("a"))
        assert capped.dimension == 1
        assert capped.weight(p3_p2.gen("y")) == 9
        assert capped.weight(p3_p2.gen("a")) == 1

    def test_cross(self, nodal_functional_d4):
        """Testar N1' × P²."""
        ring = charnum_module.P2_P2_P2
        product = nodal_functional_d4.cross(ring, "a2")
        assert product.dimension == 3
        assert product.pair(ring.gen("y") * ring.gen("a2") ** 2) == 27
        assert product.pair(ring.gen("a") * ring.gen("a2") ** 2) == 9
        assert product.pair(ring.gen("y") * ring.gen("a") * ring.gen("a2")) == 0

    def test_cross_existing_generator(self, p2_p2, nodal_functional_d4):
        """Testar produto com gerador já presente."""
        with pytest.raises(RingError):
            nodal_functional_d4.cross(p2_p2, "a")

    def test_over_projectivization(self, nodal_surface_d4):
        """Testar ⟨λ·x, P(TP²)|N1''⟩ = ⟨x, N1''⟩."""
        ring = charnum_module.P3_P2_PT
        over = nodal_surface_d4.over_projectivization(ring, "lam")
        assert over.dimension == 3
        assert over.pair(ring.gen("lam") * ring.gen("y") ** 2) == 27
        # π_*(λ²·y) = -3a·y
        assert over.pair(ring.gen("lam") ** 2 * ring.gen("y")) == -27

    def test_over_projectivization_full_integral(self, nodal_surface_d4):
        """Testar ⟨3λ³ + (7y + 19a)λ² + (5y² + 28ya + 41a²)λ, P(TP²)|N1''⟩ = 200."""
        ring = charnum_module.P3_P2_PT
        y, a, lam = ring.gen("y"), ring.gen("a"), ring.gen("lam")
        x = 3 * lam ** 3 + (7 * y + 19 * a) * lam ** 2 + (5 * y ** 2 + 28 * y * a + 41 * a ** 2) * lam
        over = nodal_surface_d4.over_projectivization(ring, "lam")
        assert over.pair(x) == 200


class TestPoincareDualCrossCheck:
    """Ciclos transversais: pesos injetados versus dual de Poincaré."""

    def test_nodal_cycle_symbolic(self):
        """Testar N1' ⊂ P²×P² contra o dual de Poincaré e(V)."""
        ring = charnum_module.P2_P2
        y, a = ring.gen("y"), ring.gen("a")
        L = line(y + D * a)
        V = direct_sum(L, twist(dual(tangent_bundle(ring, "a")), L))
        from_pd = CycleFunctional.from_poincare_dual(ring, euler(V), 1)
        injected = charnum_module._nodal_cycle(D)
        for monomial in ring.monomials(1):
            assert from_pd.weights.get(monomial, DegreeCoeff.constant(0)) == injected.weights.get(
                monomial, DegreeCoeff.constant(0)
            )

    def test_nodal_surface_symbolic(self):
        """Testar N1'' ⊂ P³×P² contra o dual de Poincaré e(V)."""
        ring = charnum_module.P3_P2
        y, a = ring.gen("y"), ring.gen("a")
        L = line(y + D * a)
        V = direct_sum(L, twist(dual(tangent_bundle(ring, "a")), L))
        from_pd = CycleFunctional.from_poincare_dual(ring, euler(V), 2)
        injected = charnum_module._nodal_surface(D)
        for monomial in ring.monomials(2):
            x = ring.monomial(**dict(zip(ring.names, monomial)))
            assert from_pd.pair(x) == injected.pair(x)

    def test_node_on_line_is_one_point(self):
        """Testar ⟨a², N1''⟩ = 1 como ∫ a²·e(V) sobre P³×P²."""
        ring = charnum_module.P3_P2
        y, a = ring.gen("y"), ring.gen("a")
        L = line(y + D * a)
        V = direct_sum(L, twist(dual(tangent_bundle(ring, "a")), L))
        assert integrate(a ** 2 * euler(V)) == 1
