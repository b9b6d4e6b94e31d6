"""Unusual sets of distances in orders of real quadratic number fields."""

from .arith import FieldData, OmegaKind, PrimeSplit, SplitKind, classify_prime, factorize, field_data, kronecker
from .class_numbers import OrderRef, class_number, has_full_unit_index, picard_order, unit_index
from .config import BudgetExceeded
from .contfrac import FundamentalUnit, fundamental_unit, unit_coords_mod, unit_power_coords_mod
from .diophantine import PellQuery, solvable_abs, solvable_scaled
from .ideals import QuadIdeal, atoms_norm_p3, ideal_norm, is_principal
from .unusual import (
    ConductorReport,
    conductor_report,
    is_unusual,
    is_unusual_cor28,
    is_unusual_norm_minus_one,
    is_unusual_thm29,
    reduced_unusual_conductors,
    type_form,
    unusual_conductors,
)

__all__ = [
    "BudgetExceeded", "ConductorReport", "FieldData", "FundamentalUnit", "OmegaKind", "OrderRef",
    "PellQuery", "PrimeSplit", "QuadIdeal", "SplitKind", "atoms_norm_p3", "class_number",
    "classify_prime", "conductor_report", "factorize", "field_data", "fundamental_unit",
    "has_full_unit_index", "ideal_norm", "is_principal", "is_unusual", "is_unusual_cor28", "is_unusual_norm_minus_one",
    "is_unusual_thm29", "kronecker", "picard_order", "reduced_unusual_conductors", "solvable_abs",
    "solvable_scaled", "type_form", "unit_coords_mod", "unit_index", "unit_power_coords_mod",
    "unusual_conductors",
]
