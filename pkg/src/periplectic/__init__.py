"""Exact computations with the restricted periplectic Lie superalgebra p(n) over F_p:
structure constants, the reduced enveloping superalgebra and its quotient by the
ideal generated by g_1^{d+1}, Kac and baby Verma modules, and the invariant center
with its Harish-Chandra image."""

from .pbw import FULL, QUOTIENT, TRUNCATED, Element, PBWAlgebra
from .structure import StructureTable, build_structure

__all__ = ["FULL", "QUOTIENT", "TRUNCATED", "Element", "PBWAlgebra", "StructureTable",
           "build_structure"]
__version__ = "0.1.0"
