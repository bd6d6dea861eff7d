from curvecount.schemas.output import OutputRecord, render, render_csv, render_json, render_plain
from curvecount.schemas.requests import (
    CharnumRequest,
    DegreeRange,
    GenusRequest,
    NdRequest,
    TableRequest,
)

__all__ = [
    "OutputRecord",
    "render",
    "render_csv",
    "render_json",
    "render_plain",
    "CharnumRequest",
    "DegreeRange",
    "GenusRequest",
    "NdRequest",
    "TableRequest",
]
