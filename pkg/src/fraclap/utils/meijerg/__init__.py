"""Meijer-G calculus: records, identities, the parameter-shift theorem and reductions."""

from fraclap.utils.meijerg.base import (
    MeijerGSpec,
    argument_inversion,
    cancel_all,
    cancel_reduce,
    multiplicative_shift,
    same_parameters,
)
from fraclap.utils.meijerg.catalog import catalog_spec, polynomial_prefactor, tabulated_output
from fraclap.utils.meijerg.reduction import (
    INSIDE,
    OUTSIDE,
    HypergeometricTerm,
    g_function_value,
    meijerg_eval,
    meijerg_eval_1d,
    meijerg_eval_with_info,
    pfq_as_meijerg,
    to_hypergeometric,
)
from fraclap.utils.meijerg.theorems import ValidityReport, apply_fractional, check_validity

__all__ = [
    "INSIDE",
    "OUTSIDE",
    "HypergeometricTerm",
    "MeijerGSpec",
    "ValidityReport",
    "apply_fractional",
    "argument_inversion",
    "cancel_all",
    "cancel_reduce",
    "catalog_spec",
    "check_validity",
    "g_function_value",
    "meijerg_eval",
    "meijerg_eval_1d",
    "meijerg_eval_with_info",
    "multiplicative_shift",
    "pfq_as_meijerg",
    "polynomial_prefactor",
    "same_parameters",
    "tabulated_output",
    "to_hypergeometric",
]
