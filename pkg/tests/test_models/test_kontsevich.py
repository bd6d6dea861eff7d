import pytest

from curvecount.core.errors import DegreeError, InconsistencyError
from curvecount.models.charnum import nd_classical
from curvecount.models.kontsevich import (
    BoundaryCount,
    BoundarySide,
    MemoTable,
    Provenance,
    binomial,
    boundary,
    boundary_terms,
    nd,
    nd_unsym,
    sequence,
)

# n_1 .. n_9
KNOWN = [
    1,
    1,
    12,
    620,
    87304,
    26312976,
    14616808192,
    13525751027392,
    19385778269260800,
]


class TestBinomial:
    """Testes para coeficientes binomiais."""

    def test_values(self):
        """Testar binom(32, 14)."""
        assert binomial(32, 14) == 471435600
        assert binomial(5, 0) == 1

    def test_out_of_range(self):
        """Testar zero fora de 0 <= k <= n."""
        assert binomial(5, 6) == 0
        assert binomial(5, -1) == 0


class TestRecursion:
    """Testes para as duas fórmulas de n_d."""

    def test_known_values(self, memo_table):
        """Testar n_1..n_9."""
        assert sequence(len(KNOWN), memo_table) == KNOWN

    def test_quintics(self, memo_table):
        """Testar n_5 = 87304."""
        assert nd(5, memo_table) == 87304

    @pytest.mark.parametrize("d", range(1, 13))
    def test_unsymmetrized_agrees(self, d):
        """Testar que as duas fórmulas coincidem até d = 12."""
        assert nd(d, MemoTable()) == nd_unsym(d, MemoTable())

    def test_classical_agrees(self, memo_table):
        """Testar a rota clássica até d = 4."""
        for d in range(1, 5):
            assert nd(d, memo_table) == nd_classical(d)

    def test_growth(self, memo_table):
        """Testar crescimento estrito a partir de d = 2."""
        values = sequence(15, memo_table)
        assert all(later > earlier for earlier, later in zip(values[1:], values[2:]))

    def test_invalid_degree(self, memo_table):
        """Testar d = 0 e graus não inteiros."""
        with pytest.raises(DegreeError):
            nd(0, memo_table)
        with pytest.raises(DegreeError):
            nd(2.0, memo_table)

    def test_large_degree_exact(self, memo_table):
        """Testar que n_40 é um inteiro exato."""
        value = nd(40, memo_table)
        assert isinstance(value, int)
        assert value > 10 ** 100

    def test_default_table(self):
        """Testar a tabela global."""
        assert nd(4) == 620


class TestMemoTable:
    """Testes para a tabela de memorização."""

    def test_base_entry(self, memo_table):
        """Testar n_1 = 1 com proveniência base."""
        assert memo_table.get(1) == 1
        assert memo_table.source(1) is Provenance.BASE
        assert len(memo_table) == 1

    def test_provenance_recorded(self, memo_table):
        """Testar a proveniência de entradas calculadas."""
        nd(3, memo_table)
        assert memo_table.source(3) is Provenance.RECURSION
        assert memo_table.provenance()[2] is Provenance.RECURSION

    def test_agreeing_record(self, memo_table):
        """Testar gravação repetida com o mesmo valor."""
        nd(4, memo_table)
        assert memo_table.record(4, 620, Provenance.UNSYM) == 620
        assert memo_table.source(4) is Provenance.RECURSION

    def test_disagreeing_record(self, memo_table):
        """Testar gravação de valor divergente."""
        nd(4, memo_table)
        with pytest.raises(InconsistencyError):
            memo_table.record(4, 621, Provenance.UNSYM)

    def test_seed_from_cache(self, memo_table):
        """Testar semente vinda do cache."""
        memo_table.seed({1: 1, 2: 1, 3: 12})
        assert memo_table.source(3) is Provenance.CACHE
        assert nd(4, memo_table) == 620

    def test_seeded_wrong_value_detected_by_oracle(self, memo_table):
        """Testar que um cache errado diverge da fórmula não simetrizada."""
        memo_table.seed({2: 1, 3: 13})
        assert nd(3, memo_table) == 13
        assert nd_unsym(3, MemoTable()) == 12

    def test_snapshot_is_copy(self, memo_table):
        """Testar que o snapshot não altera a tabela."""
        snapshot = memo_table.snapshot()
        snapshot[2] = 99
        assert 2 not in memo_table


class TestBoundary:
    """Testes para as contagens nos divisores de fronteira."""

    @pytest.mark.parametrize("d", range(2, 13))
    def test_sides_agree(self, d, memo_table):
        """Testar N_d[1,0] = N_d[0,1]."""
        one_zero = boundary(d, BoundarySide.ONE_ZERO, memo_table)
        zero_one = boundary(d, BoundarySide.ZERO_ONE, memo_table)
        assert one_zero.value == zero_one.value

    def test_conics(self, memo_table):
        """Testar d = 2: 2 nos dois lados."""
        assert boundary(2, "[1,0]", memo_table).value == 2
        assert boundary_terms(2, "[0,1]", memo_table) == [(0, 1), (1, 1)]

    def test_lines_sides_differ(self, memo_table):
        """Testar d = 1: [1,0] vazio e [0,1] só com o termo n_1."""
        assert boundary(1, BoundarySide.ONE_ZERO, memo_table).value == 0
        assert boundary_terms(1, BoundarySide.ZERO_ONE, memo_table) == [(0, 1)]

    def test_cubics(self, memo_table):
        """Testar d = 3, lado [1,0]."""
        terms = boundary_terms(3, BoundarySide.ONE_ZERO, memo_table)
        # binom(5, 1)·1·4 + binom(5, 4)·4·1
        assert terms == [(1, 20), (2, 20)]

    def test_negative_count_rejected(self):
        """Testar contagem negativa."""
        with pytest.raises(InconsistencyError):
            BoundaryCount(d=3, side=BoundarySide.ONE_ZERO, value=-1)
