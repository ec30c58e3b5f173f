"""Exact second solutions of second-order linear difference equations."""
from .chg import ChgParams, p_poly, phi, psibar
from .exactcore import DensePoly, LaurentLogExpansion
from .recurrence import Orbit, RecurrenceSpec, dalembert_second, iterate

__all__ = [
    "ChgParams",
    "DensePoly",
    "LaurentLogExpansion",
    "Orbit",
    "RecurrenceSpec",
    "dalembert_second",
    "iterate",
    "p_poly",
    "phi",
    "psibar",
]
