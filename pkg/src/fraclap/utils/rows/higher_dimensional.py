"""Radial rows in R^d and the Meijer-G route shared by every row."""

import math

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, jacobi_eval, solid_harmonic
from fraclap.utils.meijerg import apply_fractional, cancel_all, catalog_spec, meijerg_eval_with_info
from fraclap.utils.rows.base import (
    Branch,
    FracResult,
    RowFormula,
    SeriesSum,
    Singularities,
    radial_power,
)
from fraclap.utils.special_functions import gamma, pochhammer, rgamma


def _half_dimension(f: BasisFunction) -> float:
    return f.d / 2 + f.ell


def _jacobi_scale(f: BasisFunction, s: float, a: float) -> float:
    return 4.0**s * gamma(a + f.n + 1) / math.factorial(f.n)


def _finish(f: BasisFunction, x: EvalPoint, series: SeriesSum, branch: Branch) -> FracResult:
    value = solid_harmonic(x.coords, f.ell, f.j) * series.value
    return FracResult(value=value, branch_used=branch, terms_evaluated=series.terms)


class BallJacobiRow(RowFormula):
    """V_l (1-|x|^2)_+^a P_n^(a,b)(2|x|^2-1) for general a, b."""

    @property
    def row_id(self) -> RowId:
        return RowId.HD_A

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        a, b = f.get("a"), f.get("b")
        half = _half_dimension(f)
        r = x.r
        scale = _jacobi_scale(f, s, a)
        branch = self.branch_for(r)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            # Gamma(-b-s) / Gamma(-b-n-s) written as a rising factorial.
            coefficient = (
                scale * pochhammer(-b - n - s, n) * gamma(half + s) * rgamma(a + n - s + 1) / gamma(half)
            )
            series.add(coefficient, (-a - n + s, b + n + s + 1, half + s), (b + s + 1, half), r * r)
        else:
            coefficient = scale * gamma(half + s) * gamma(half - b) * rgamma(-s)
            if coefficient != 0.0:
                coefficient *= radial_power(r, -2 * half - 2 * s)
            series.add(
                coefficient,
                (s + 1, half - b, half + s),
                (half - b - n, a + half + n + 1),
                1.0 / (r * r),
                regularized=True,
            )
        return _finish(f, x, series, branch)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[_half_dimension(f) + s], sine=[f.get("b") + s])


class BallJacobiShiftedRow(RowFormula):
    """HD_A with b = (d + 2 ell - 2) / 2: the 3F2 collapses to a 2F1."""

    special_tag = "A*"

    @property
    def row_id(self) -> RowId:
        return RowId.HD_A

    def _weight(self, f: BasisFunction, s: float) -> float:
        return f.get("a")

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        a = self._weight(f, s)
        half = _half_dimension(f)
        r = x.r
        signed = (-1) ** n * _jacobi_scale(f, s, a) * gamma(half + n + s)
        branch = self.branch_for(r)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            coefficient = signed * rgamma(a + n - s + 1)
            series.add(coefficient, (-a - n + s, half + n + s), (half,), r * r, regularized=True)
        else:
            coefficient = signed * rgamma(-n - s)
            if coefficient != 0.0:
                coefficient *= radial_power(r, -2 * half - 2 * n - 2 * s)
            series.add(
                coefficient, (n + s + 1, half + n + s), (a + half + 2 * n + 1,), 1.0 / (r * r), regularized=True
            )
        return _finish(f, x, series, branch)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[_half_dimension(f) + f.n + s])


class BallJacobiEigenRow(BallJacobiShiftedRow):
    """HD_A with a = s and b = (d + 2 ell - 2) / 2: an eigenfunction inside the ball."""

    special_tag = "A**"

    def _weight(self, f: BasisFunction, s: float) -> float:
        return s

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        r = x.r
        if self.branch_for(r) == Branch.OUTSIDE:
            return super().evaluate(f, s, x)
        n = f.n
        half = _half_dimension(f)
        eigenvalue = _jacobi_scale(f, s, s) * gamma(half + n + s) / gamma(half + n)
        value = solid_harmonic(x.coords, f.ell, f.j) * eigenvalue * jacobi_eval(n, s, half - 1, 2 * r * r - 1)
        return FracResult(value=value, branch_used=Branch.INSIDE, terms_evaluated=n + 1)


class BallIndicatorRow(RowFormula):
    """V_l times the indicator of the unit ball (HD_A with a = 0, n = 0)."""

    special_tag = "A***"

    @property
    def row_id(self) -> RowId:
        return RowId.HD_A

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        half = _half_dimension(f)
        r = x.r
        scale = 4.0**s * gamma(half + s)
        branch = self.branch_for(r)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            series.add(scale * rgamma(1 - s), (s, half + s), (half,), r * r, regularized=True)
        else:
            coefficient = scale * rgamma(-s)
            if coefficient != 0.0:
                coefficient *= radial_power(r, -2 * half - 2 * s)
            series.add(coefficient, (s + 1, half + s), (half + 1,), 1.0 / (r * r), regularized=True)
        return _finish(f, x, series, branch)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[_half_dimension(f) + s])


class WholeSpaceLaguerreRow(RowFormula):
    """V_l exp(-|x|^2) L_n^alpha(|x|^2)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.HD_B

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        alpha = f.get("alpha")
        half = _half_dimension(f)
        r = x.r
        coefficient = 4.0**s * gamma(half + s) * gamma(n + s + alpha + 1) / math.factorial(n)
        series = SeriesSum()
        series.add(coefficient, (half + s, n + s + alpha + 1), (s + alpha + 1, half), -r * r, regularized=True)
        return _finish(f, x, series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[_half_dimension(f) + s, f.n + s + f.get("alpha") + 1])


class MeijerGPathRow(RowFormula):
    """Any catalog row through catalog_spec, apply_fractional and the residue sum.

    Used directly for HD_C and HD_D, and as the fallback when a row's
    parameters sit on a pole of its explicit formula.
    """

    def __init__(self, row: RowId):
        self._row = row

    @property
    def row_id(self) -> RowId:
        return self._row

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        g = cancel_all(apply_fractional(catalog_spec(f), s))
        r = x.r
        value, count, perturbed = meijerg_eval_with_info(g, r)
        if g.p == g.q:
            branch = Branch.OUTSIDE if r > 1.0 else Branch.INSIDE
        else:
            branch = Branch.WHOLE_LINE
        harmonic = solid_harmonic(x.coords, g.ell, f.j)
        return FracResult(value=harmonic * value, branch_used=branch, near_pole=perturbed, terms_evaluated=count)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities()
