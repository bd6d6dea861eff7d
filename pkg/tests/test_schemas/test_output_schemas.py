import csv
import io
import json

import pytest
from pydantic import ValidationError

from curvecount.schemas.output import (
    CSV_COLUMNS,
    OutputRecord,
    render,
    render_csv,
    render_json,
    render_plain,
)


@pytest.fixture
def records():
    return [
        OutputRecord(
            command="nd",
            inputs={"degree": "4", "method": "recursion"},
            result="620",
            provenance="recursion",
            elapsed_ms=1,
        ),
        OutputRecord(
            command="charnum",
            inputs={"name": "N21", "degree": "d"},
            result="9*d^3 - 27*d^2 - d + 30",
            provenance="pipeline.N21-boundary",
            elapsed_ms=12,
        ),
    ]


class TestOutputRecordSchema:
    """Testes para schema OutputRecord."""

    def test_valid_record(self):
        """Testar criação válida de registro."""
        record = OutputRecord(command="genus", inputs={"degree": "4"}, result="3", provenance="x")
        assert record.elapsed_ms == 0
        assert record.inputs == {"degree": "4"}

    def test_float_result_rejected(self):
        """Testar que resultado em ponto flutuante é recusado."""
        with pytest.raises(ValidationError) as exc_info:
            OutputRecord(command="nd", result="620.0", provenance="recursion")
        assert "result" in str(exc_info.value).lower()

    @pytest.mark.parametrize("result", ["30 - d + 9*d^3 - 27*d^2", "d^2+1", "d + x", "d/2", ""])
    def test_non_canonical_result_rejected(self, result):
        """Testar polinômios fora da forma canônica ou inválidos."""
        with pytest.raises(ValidationError):
            OutputRecord(command="charnum", result=result, provenance="pipeline.N21")

    def test_canonical_fraction_accepted(self):
        """Testar polinômio com denominador comum, como N2."""
        text = "(9*d^4 - 36*d^3 + 12*d^2 + 81*d - 66)/2"
        assert OutputRecord(command="charnum", result=text, provenance="pipeline.N2/2").result == text

    def test_negative_elapsed(self):
        """Testar tempo negativo."""
        with pytest.raises(ValidationError):
            OutputRecord(command="nd", result="1", provenance="base", elapsed_ms=-1)

    def test_field_order(self):
        """Testar as chaves na ordem do schema."""
        record = OutputRecord(command="nd", result="1", provenance="base")
        assert list(json.loads(record.model_dump_json())) == CSV_COLUMNS


class TestRenderers:
    """Testes para os formatos de saída."""

    def test_json_lines_round_trip(self, records):
        """Testar que reler e reserializar o JSON é idêntico byte a byte."""
        text = render_json(records)
        lines = text.split("\n")
        assert len(lines) == 2
        for line, record in zip(lines, records):
            parsed = OutputRecord.model_validate_json(line)
            assert parsed == record
            assert parsed.model_dump_json() == line

    def test_json_big_integers_are_strings(self):
        """Testar inteiros grandes como strings decimais."""
        big = str(10 ** 60 + 7)
        record = OutputRecord(command="nd", result=big, provenance="recursion")
        assert json.loads(render_json([record]))["result"] == big

    def test_csv(self, records):
        """Testar cabeçalho e inputs "k=v;k=v"."""
        rows = list(csv.reader(io.StringIO(render_csv(records))))
        assert rows[0] == CSV_COLUMNS
        assert rows[1] == ["nd", "degree=4;method=recursion", "620", "recursion", "1"]
        assert rows[2][2] == "9*d^3 - 27*d^2 - d + 30"

    def test_plain(self, records):
        """Testar uma linha por registro."""
        lines = render_plain(records).split("\n")
        assert lines[0] == "nd degree=4 method=recursion: 620 [recursion]"

    def test_same_values_in_every_format(self, records):
        """Testar que os três formatos carregam os mesmos resultados."""
        for fmt in ("plain", "json", "csv"):
            text = render(records, fmt)
            assert "620" in text
            assert "9*d^3 - 27*d^2 - d + 30" in text

    def test_unknown_format(self, records):
        """Testar formato desconhecido."""
        with pytest.raises(ValueError):
            render(records, "xml")
