# curvecount/schemas/requests.py

import re
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from curvecount.models.charnum import CharNumName

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


class DegreeRange(BaseModel):
    """Intervalo fechado de graus, escrito "a..b"."""
    start: int = Field(..., ge=1, description="Primeiro grau")
    end: int = Field(..., ge=1, description="Último grau")

    @model_validator(mode="after")
    def validate_order(self):
        if self.start > self.end:
            raise ValueError(f"Intervalo vazio: {self.start}..{self.end}")
        return self

    @classmethod
    def parse(cls, text: str) -> "DegreeRange":
        match = _RANGE.match(text)
        if not match:
            raise ValueError(f"Intervalo deve ter a forma a..b: {text!r}")
        return cls(start=int(match.group(1)), end=int(match.group(2)))

    def degrees(self) -> List[int]:
        return list(range(self.start, self.end + 1))

    def __str__(self) -> str:
        return f"{self.start}..{self.end}"


def _coerce_range(v):
    if v is None or isinstance(v, DegreeRange):
        return v
    if isinstance(v, str):
        return DegreeRange.parse(v)
    return v


class NdRequest(BaseModel):
    """Parâmetros de `nd`."""
    degree: Optional[int] = Field(None, ge=1, description="Grau d")
    degree_range: Optional[DegreeRange] = Field(None, description="Intervalo a..b")
    method: Literal["recursion", "unsym", "classical", "all"] = "recursion"
    max_degree: int = Field(200, ge=1, description="Maior grau aceito")

    @field_validator("degree_range", mode="before")
    @classmethod
    def parse_range(cls, v):
        return _coerce_range(v)

    @model_validator(mode="after")
    def validate_degrees(self):
        if (self.degree is None) == (self.degree_range is None):
            raise ValueError("Informe exatamente um entre --degree e --degree-range")
        top = self.degree if self.degree is not None else self.degree_range.end
        if top > self.max_degree:
            raise ValueError(f"Grau {top} acima do máximo configurado ({self.max_degree})")
        if self.method == "classical" and top > 4:
            raise ValueError("O método clássico só cobre graus de 1 a 4")
        return self

    def degrees(self) -> List[int]:
        if self.degree is not None:
            return [self.degree]
        return self.degree_range.degrees()


class CharnumRequest(BaseModel):
    """Parâmetros de `charnum`."""
    name: Optional[CharNumName] = Field(None, description="Nome do número característico")
    all: bool = Field(False, description="Todas as nove linhas")
    degree: Optional[int] = Field(None, ge=1, description="Grau numérico")
    symbolic: bool = Field(False, description="Polinômio em d")

    @model_validator(mode="after")
    def validate_choice(self):
        if (self.name is None) == (not self.all):
            raise ValueError("Informe um nome ou --all (não ambos)")
        if (self.degree is None) == (not self.symbolic):
            raise ValueError("Informe exatamente um entre --degree e --symbolic")
        return self

    def names(self) -> List[CharNumName]:
        return list(CharNumName) if self.all else [self.name]


class TableRequest(BaseModel):
    """Parâmetros de `table`."""
    which: Literal["quartics", "general"]
    degree_range: Optional[DegreeRange] = None

    @field_validator("degree_range", mode="before")
    @classmethod
    def parse_range(cls, v):
        return _coerce_range(v)

    @model_validator(mode="after")
    def validate_range(self):
        if self.which == "general":
            if self.degree_range is None:
                raise ValueError("`table general` exige --degree-range a..b")
            if self.degree_range.start < 3:
                raise ValueError("A tabela geral completa só vale para d >= 3")
        return self


class GenusRequest(BaseModel):
    """Parâmetros de `genus`."""
    degree: int = Field(..., ge=1, description="Grau d da curva lisa")
