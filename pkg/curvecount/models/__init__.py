"""
Models - Núcleo de cálculo
Este arquivo importa os tipos principais para que possam ser facilmente acessados.
"""

from curvecount.models.degree import DegreeCoeff
from curvecount.models.graded_ring import CohClass, Nilpotent, ProjBundle, Ring, RingSpec, make_ring
from curvecount.models.chern import CycleFunctional, FormalBundle
from curvecount.models.charnum import CharNumName, CharNumRecord, ExcessName, charnum, charnum_all
from curvecount.models.kontsevich import MemoTable, nd, nd_unsym

__all__ = [
    "DegreeCoeff",
    "CohClass",
    "Nilpotent",
    "ProjBundle",
    "Ring",
    "RingSpec",
    "make_ring",
    "CycleFunctional",
    "FormalBundle",
    "CharNumName",
    "CharNumRecord",
    "ExcessName",
    "charnum",
    "charnum_all",
    "MemoTable",
    "nd",
    "nd_unsym",
]
