"""
curvecount
Contagens enumerativas exatas de curvas planas
"""

__version__ = "1.0.0"
