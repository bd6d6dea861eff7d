"""
Routers - Comandos da CLI
"""

from curvecount.routers.nd import register as nd_router
from curvecount.routers.charnum import register as charnum_router
from curvecount.routers.table import register as table_router
from curvecount.routers.genus import register as genus_router


__all__ = [
    "nd_router",
    "charnum_router",
    "table_router",
    "genus_router",
]
