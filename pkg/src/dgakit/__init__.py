"""Exact computations in commutative differential graded algebras.

Cohomology, triple and a-Massey products, circle extensions and tensor
products over the rationals.
"""
__version__ = "0.1.0"

from .cdga import Cdga, StructureConstants, ValidationError, catalog, chevalley_eilenberg, validate
from .cohomology import betti_numbers, class_of, cohomology, cup, cup_map_rank, is_exact
from .constructions import (SymplecticClassChoice, circle_extension, gysin_report, pullback,
                            symplectic_check, tensor)
from .exterior import Element, GradedAlgebra, basis_of_degree, linear_combine, multiply, normalize_word
from .kernels import BACKEND
from .massey import a_massey, massey_scan, triple_massey

__all__ = [
    "BACKEND", "Cdga", "Element", "GradedAlgebra", "StructureConstants", "SymplecticClassChoice",
    "ValidationError", "a_massey", "basis_of_degree", "betti_numbers", "catalog", "chevalley_eilenberg",
    "circle_extension", "class_of", "cohomology", "cup", "cup_map_rank", "gysin_report", "is_exact",
    "linear_combine", "massey_scan", "multiply", "normalize_word", "pullback", "symplectic_check",
    "tensor", "triple_massey", "validate",
]
