# utils package
from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, basis_eval
from fraclap.utils.errors import FracLapError, ValidityError
from fraclap.utils.explicit_operators import frac_apply, frac_apply_many, resolve_row, riesz_apply
from fraclap.utils.spectral_solver import solve_fractional_disk, solve_fractional_interval

__all__ = [
    "BasisFunction",
    "EvalPoint",
    "RowId",
    "basis_eval",
    "FracLapError",
    "ValidityError",
    "frac_apply",
    "frac_apply_many",
    "resolve_row",
    "riesz_apply",
    "solve_fractional_disk",
    "solve_fractional_interval",
]
