import pytest
from pydantic import ValidationError

from curvecount.models.charnum import CharNumName
from curvecount.schemas.requests import (
    CharnumRequest,
    DegreeRange,
    GenusRequest,
    NdRequest,
    TableRequest,
)


class TestDegreeRange:
    """Testes para o intervalo a..b."""

    def test_parse(self):
        """Testar leitura válida."""
        value = DegreeRange.parse("3..6")
        assert value.degrees() == [3, 4, 5, 6]
        assert str(value) == "3..6"

    def test_single_degree(self):
        """Testar intervalo com um único grau."""
        assert DegreeRange.parse("4..4").degrees() == [4]

    @pytest.mark.parametrize("text", ["3-6", "a..b", "..4", "3..", ""])
    def test_malformed(self, text):
        """Testar formatos inválidos."""
        with pytest.raises(ValueError):
            DegreeRange.parse(text)

    def test_reversed(self):
        """Testar intervalo vazio."""
        with pytest.raises(ValidationError):
            DegreeRange.parse("6..3")

    def test_zero_start(self):
        """Testar grau zero."""
        with pytest.raises(ValidationError):
            DegreeRange.parse("0..3")


class TestNdRequest:
    """Testes para schema NdRequest."""

    def test_single_degree(self):
        """Testar requisição com um grau."""
        request = NdRequest(degree=4)
        assert request.method == "recursion"
        assert request.degrees() == [4]

    def test_range_from_text(self):
        """Testar intervalo vindo da linha de comando."""
        request = NdRequest(degree_range="1..3", method="unsym")
        assert request.degrees() == [1, 2, 3]

    def test_degree_and_range(self):
        """Testar grau e intervalo ao mesmo tempo."""
        with pytest.raises(ValidationError):
            NdRequest(degree=3, degree_range="1..3")

    def test_neither(self):
        """Testar ausência de grau."""
        with pytest.raises(ValidationError):
            NdRequest()

    def test_degree_zero(self):
        """Testar d = 0."""
        with pytest.raises(ValidationError) as exc_info:
            NdRequest(degree=0)
        assert "degree" in str(exc_info.value).lower()

    def test_classical_limit(self):
        """Testar rota clássica acima de d = 4."""
        with pytest.raises(ValidationError) as exc_info:
            NdRequest(degree=5, method="classical")
        assert "clássico" in str(exc_info.value)

    def test_max_degree(self):
        """Testar o limite configurado."""
        with pytest.raises(ValidationError):
            NdRequest(degree=11, max_degree=10)

    def test_unknown_method(self):
        """Testar método desconhecido."""
        with pytest.raises(ValidationError):
            NdRequest(degree=3, method="guess")


class TestCharnumRequest:
    """Testes para schema CharnumRequest."""

    def test_named_numeric(self):
        """Testar nome e grau."""
        request = CharnumRequest(name="K2", degree=4)
        assert request.names() == [CharNumName.K2]

    def test_all_symbolic(self):
        """Testar --all --symbolic."""
        request = CharnumRequest(all=True, symbolic=True)
        assert len(request.names()) == 9

    def test_name_and_all(self):
        """Testar nome junto com --all."""
        with pytest.raises(ValidationError):
            CharnumRequest(name="K2", all=True, degree=4)

    def test_degree_and_symbolic(self):
        """Testar grau junto com --symbolic."""
        with pytest.raises(ValidationError):
            CharnumRequest(name="K2", degree=4, symbolic=True)

    def test_unknown_name(self):
        """Testar nome fora da tabela."""
        with pytest.raises(ValidationError):
            CharnumRequest(name="N4", degree=4)


class TestTableRequest:
    """Testes para schema TableRequest."""

    def test_quartics(self):
        """Testar tabela das quárticas sem intervalo."""
        assert TableRequest(which="quartics").degree_range is None

    def test_general(self):
        """Testar tabela geral com intervalo."""
        request = TableRequest(which="general", degree_range="3..5")
        assert request.degree_range.degrees() == [3, 4, 5]

    def test_general_requires_range(self):
        """Testar tabela geral sem intervalo."""
        with pytest.raises(ValidationError):
            TableRequest(which="general")

    def test_general_below_three(self):
        """Testar tabela geral começando em d = 2."""
        with pytest.raises(ValidationError):
            TableRequest(which="general", degree_range="2..4")


class TestGenusRequest:
    """Testes para schema GenusRequest."""

    def test_valid(self):
        """Testar grau válido."""
        assert GenusRequest(degree=4).degree == 4

    def test_zero(self):
        """Testar d = 0."""
        with pytest.raises(ValidationError):
            GenusRequest(degree=0)
