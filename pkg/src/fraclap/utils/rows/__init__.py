"""Explicit fractional-Laplacian formulas, one class per catalog row."""

from fraclap.utils.rows.base import Branch, FracResult, RowFormula, SeriesSum, Singularities
from fraclap.utils.rows.higher_dimensional import (
    BallIndicatorRow,
    BallJacobiEigenRow,
    BallJacobiRow,
    BallJacobiShiftedRow,
    MeijerGPathRow,
    WholeSpaceLaguerreRow,
)
from fraclap.utils.rows.one_dimensional import (
    BesselJRow,
    BesselPhaseRow,
    BesselProductRow,
    BesselYRow,
    CosineBesselYRow,
    HermiteHalfRow,
    HermiteMinusHalfRow,
    HermiteRow,
    JacobiEigenRow,
    JacobiHalfRow,
    JacobiMinusHalfRow,
    JacobiWeightRow,
    LaguerreRow,
    RadialJacobiRow,
    SineBesselYRow,
)

__all__ = [
    "BallIndicatorRow",
    "BallJacobiEigenRow",
    "BallJacobiRow",
    "BallJacobiShiftedRow",
    "BesselJRow",
    "BesselPhaseRow",
    "BesselProductRow",
    "BesselYRow",
    "Branch",
    "CosineBesselYRow",
    "FracResult",
    "HermiteHalfRow",
    "HermiteMinusHalfRow",
    "HermiteRow",
    "JacobiEigenRow",
    "JacobiHalfRow",
    "JacobiMinusHalfRow",
    "JacobiWeightRow",
    "LaguerreRow",
    "MeijerGPathRow",
    "RadialJacobiRow",
    "RowFormula",
    "SeriesSum",
    "SineBesselYRow",
    "Singularities",
    "WholeSpaceLaguerreRow",
]
