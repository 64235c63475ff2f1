"""Base row-formula protocol and result types."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId
from fraclap.utils.errors import BranchError, DivergenceError, DomainError
from fraclap.utils.special_functions import (
    PFQParams,
    hyp2f1_unit,
    nearest_integer_distance,
    pfq_regularized_with_count,
    pfq_with_count,
    rgamma,
)

# Arguments closer than this to a gamma pole or a sine zero trigger the
# perturbation path in frac_apply.
NEAR_POLE_THRESHOLD = 1e-7


class Branch(Enum):
    """Which representation produced a value."""

    INSIDE = "inside"  # series in |x|^2, |x| < 1
    OUTSIDE = "outside"  # series in 1/|x|^2, |x| > 1
    WHOLE_LINE = "whole_line"  # one entire series valid everywhere


@dataclass
class FracResult:
    """Value of (-Delta)^s f at one point."""

    value: float
    branch_used: Branch
    near_pole: bool = False  # perturbation and extrapolation were used
    terms_evaluated: int = 0


@dataclass
class Singularities:
    """Arguments whose integrality would make a formula blow up or go 0/0.

    gamma: arguments of gamma functions (singular at non-positive integers).
    sine: arguments z of sin(pi z) in denominators (zero at integers).
    """

    gamma: list[float] = field(default_factory=list)
    sine: list[float] = field(default_factory=list)

    def closest_distance(self) -> float:
        distances = [math.inf]
        for z in self.gamma:
            if z < 0.5:
                distances.append(nearest_integer_distance(z))
        for z in self.sine:
            distances.append(nearest_integer_distance(z))
        return min(distances)

    def near_pole(self, threshold: float = NEAR_POLE_THRESHOLD) -> bool:
        return self.closest_distance() <= threshold


class SeriesSum:
    """Running sum of coefficient * pFq terms with a count of series terms."""

    def __init__(self):
        self.value = 0.0
        self.terms = 0

    def add(
        self,
        coefficient: float,
        upper: Sequence[float],
        lower: Sequence[float],
        z: float,
        regularized: bool = False,
    ) -> None:
        """Add coefficient * pFq(upper; lower; z), or the regularized series.

        At z = 1 a non-terminating 2F1 is summed by Gauss's formula.

        Raises:
            BranchError: A unit-argument series that has no closed sum here.
        """
        if coefficient == 0.0:
            return
        try:
            if regularized:
                value, count = pfq_regularized_with_count(upper, lower, z)
            else:
                value, count = pfq_with_count(PFQParams(tuple(upper), tuple(lower), z))
        except DivergenceError:
            if z != 1.0 or len(upper) != 2 or len(lower) != 1:
                raise BranchError(
                    f"{len(upper)}F{len(lower)} at |x| = 1 has no closed sum. Evaluate at |x| != 1"
                ) from None
            value, count = hyp2f1_unit(upper[0], upper[1], lower[0]), 1
            if regularized:
                value *= rgamma(lower[0])
        self.value += coefficient * value
        self.terms += count


def radial_power(r: float, exponent: float) -> float:
    """r^exponent for r >= 0.

    Raises:
        DomainError: For a negative exponent at r = 0.
    """
    if r == 0.0:
        if exponent > 0:
            return 0.0
        if exponent == 0:
            return 1.0
        raise DomainError(f"|x|^{exponent} is singular at x = 0")
    return r**exponent


class RowFormula(ABC):
    """Explicit fractional Laplacian of one catalog row."""

    # Rows whose image is given separately on |x| < 1 and |x| > 1.
    piecewise: bool = True
    # Table of closed forms at special orders this formula comes from, e.g. "1*".
    special_tag: Optional[str] = None

    @property
    @abstractmethod
    def row_id(self) -> RowId:
        """Catalog row this formula serves."""
        pass

    @abstractmethod
    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        """Evaluate the formula as written, without pole handling.

        Args:
            f: Basis function of this row.
            s: Signed order, positive for the fractional Laplacian.
            x: Evaluation point.

        Returns:
            FracResult with near_pole False.
        """
        pass

    @abstractmethod
    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        """Gamma and sine arguments that the formula divides by or evaluates."""
        pass

    def parameter_singular(self, f: BasisFunction) -> bool:
        """True when the row parameters alone put the formula on a pole.

        Perturbing s cannot help there; callers switch to the Meijer-G path.
        """
        return False

    def branch_for(self, r: float) -> Branch:
        """Branch used at radius r; the unit sphere uses the inside series."""
        if not self.piecewise:
            return Branch.WHOLE_LINE
        return Branch.OUTSIDE if r > 1.0 else Branch.INSIDE


def near_gamma_pole(z: float, threshold: float = NEAR_POLE_THRESHOLD) -> bool:
    """True when z is within threshold of a pole of Gamma."""
    return z < 0.5 and nearest_integer_distance(z) <= threshold


def near_integer(z: float, threshold: float = NEAR_POLE_THRESHOLD) -> bool:
    return nearest_integer_distance(z) <= threshold
