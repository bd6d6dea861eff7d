# curvecount/schemas/output.py

import csv
import io
import time
from typing import Dict, Iterable, List, Literal

from pydantic import BaseModel, Field, field_validator

from curvecount.models.degree import DegreeCoeff

OutputFormat = Literal["plain", "json", "csv"]

CSV_COLUMNS = ["command", "inputs", "result", "provenance", "elapsed_ms"]


class OutputRecord(BaseModel):
    """Um resultado de comando. Números sempre como strings decimais exatas."""
    command: str = Field(..., description="Comando que produziu o registro")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Parâmetros usados")
    result: str = Field(..., description="Inteiro decimal ou polinômio canônico em d")
    provenance: str = Field(..., description="Fórmula ou pipeline que gerou o valor")
    elapsed_ms: int = Field(0, ge=0, description="Tempo de parede em milissegundos")

    @field_validator("result")
    @classmethod
    def validate_result(cls, v):
        """Aceitar só inteiro decimal ou polinômio em d já na forma canônica."""
        digits = v.removeprefix("-")
        if digits.isascii() and digits.isdecimal():
            return v
        try:
            canonical = str(DegreeCoeff.parse(v))
        except (ValueError, ArithmeticError):
            canonical = None
        if canonical != v:
            raise ValueError("Resultado deve ser inteiro exato ou polinômio canônico em d")
        return v

    def inputs_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.inputs.items())


def render_plain(records: Iterable[OutputRecord]) -> str:
    lines = []
    for record in records:
        inputs = " ".join(f"{k}={v}" for k, v in record.inputs.items())
        lines.append(f"{record.command} {inputs}: {record.result} [{record.provenance}]")
    return "\n".join(lines)


def render_json(records: Iterable[OutputRecord]) -> str:
    """JSON Lines: um objeto por linha, na ordem dos campos do modelo."""
    return "\n".join(record.model_dump_json() for record in records)


def render_csv(records: Iterable[OutputRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow([
            record.command,
            record.inputs_text(),
            record.result,
            record.provenance,
            str(record.elapsed_ms),
        ])
    return buffer.getvalue().rstrip("\n")


_RENDERERS = {
    "plain": render_plain,
    "json": render_json,
    "csv": render_csv,
}


def render(records: List[OutputRecord], fmt: OutputFormat) -> str:
    """Formatar registros para stdout."""
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"Formato desconhecido: {fmt}") from None
    return renderer(records)


def elapsed_ms(start: float) -> int:
    """Milissegundos desde `start` (time.perf_counter)."""
    return max(0, int((time.perf_counter() - start) * 1000))
