"""Closed-form fractional Laplacians of the one-dimensional catalog rows.

Every series with lower parameters that can cross a gamma pole is summed in
regularized form; the matching gamma factors are folded into the coefficient.
"""

import math

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, jacobi_eval
from fraclap.utils.meijerg.catalog import polynomial_prefactor
from fraclap.utils.rows.base import (
    Branch,
    FracResult,
    RowFormula,
    SeriesSum,
    Singularities,
    near_gamma_pole,
    near_integer,
    radial_power,
)
from fraclap.utils.special_functions import cospi, gamma, parity_split, rgamma, sinpi

SQRTPI = math.sqrt(math.pi)
PI_3_2 = math.pi * SQRTPI


def _scaled(coefficient: float, r: float, exponent: float) -> float:
    if coefficient == 0.0:
        return 0.0
    return coefficient * radial_power(r, exponent)


def _odd(t: float, odd: int) -> float:
    return t if odd else 1.0


def _result(series: SeriesSum, branch: Branch) -> FracResult:
    return FracResult(value=series.value, branch_used=branch, terms_evaluated=series.terms)


class JacobiWeightRow(RowFormula):
    """Rows 1-4: (1-x^2)_+^A times a symmetric Jacobi-type polynomial."""

    def __init__(self, row: RowId):
        self._row = row

    @property
    def row_id(self) -> RowId:
        return self._row

    def weight_exponent(self, f: BasisFunction) -> float:
        if self._row == RowId.T1R1:
            return f.get("a")
        if self._row == RowId.T1R2:
            return f.get("lam") - 0.5
        return -0.5 if self._row == RowId.T1R3 else 0.5

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        weight = self.weight_exponent(f)
        t = x.coords[0]
        ax = abs(t)
        scale = 4.0**s * polynomial_prefactor(f) * _odd(t, o)
        branch = self.branch_for(ax)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            coefficient = (
                scale
                * math.pi
                * rgamma(0.5 - k - o - s)
                * rgamma(weight - s + k + 1)
                / (sinpi(0.5 - o - s) * gamma(o + 0.5))
            )
            series.add(coefficient, (-weight + s - k, n + s - k + 0.5), (o + 0.5,), t * t)
        else:
            tail = (n - 1) // 2
            coefficient = -scale * 2.0 ** (-n - 2 * s) * sinpi(s) * gamma(n + 2 * s + 1) / SQRTPI
            series.add(
                _scaled(coefficient, ax, -2 * tail - 2 * s - 3),
                (s + k + 1, tail + 1.5 + s),
                (weight + n + 1.5,),
                1.0 / (t * t),
                regularized=True,
            )
        return _result(series, branch)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        k, o = parity_split(f.n)
        return Singularities(gamma=[0.5 - k - o - s, f.n + 2 * s + 1], sine=[0.5 - o - s])


class RadialJacobiRow(RowFormula):
    """Row 5: (1-x^2)_+^a (x^2)^b P_n^(a,b)(2x^2-1)."""

    @property
    def row_id(self) -> RowId:
        return RowId.T1R5

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        a, b = f.get("a"), f.get("b")
        t = x.coords[0]
        ax = abs(t)
        z = t * t
        branch = self.branch_for(ax)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            scale = 4.0**s * polynomial_prefactor(f)
            first = scale * math.pi * gamma(s + 0.5) * rgamma(-n - s) * rgamma(a + b + n - s + 1) / sinpi(b - s)
            series.add(first, (s + 0.5, -a - b - n + s, n + s + 1), (0.5, -b + s + 1), z, regularized=True)
            # Residue at b - s; absent for integer b.
            companion = 4.0**s / math.factorial(n) * rgamma(-n - b)
            if companion != 0.0:
                companion *= math.pi * gamma(b + 0.5) / sinpi(s - b)
                series.add(
                    _scaled(companion, ax, 2 * (b - s)),
                    (b + 0.5, -a - n, b + n + 1),
                    (b - s + 1, b - s + 0.5),
                    z,
                    regularized=True,
                )
        else:
            coefficient = -polynomial_prefactor(f) * sinpi(s) * gamma(2 * s + 1) * gamma(b + 0.5) / SQRTPI
            series.add(
                _scaled(coefficient, ax, -2 * s - 1),
                (b + 0.5, s + 0.5, s + 1),
                (0.5 - n, a + b + n + 1.5),
                1.0 / z,
                regularized=True,
            )
        return _result(series, branch)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[s + 0.5, 2 * s + 1], sine=[f.get("b") - s])


class HermiteRow(RowFormula):
    """Row 6: exp(-x^2) H_n(x)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R6

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        t = x.coords[0]
        coefficient = (
            4.0**s * 2.0**n * _odd(t, o) * math.pi * rgamma(0.5 - k - o - s) / (sinpi(0.5 - o - s) * gamma(o + 0.5))
        )
        series = SeriesSum()
        series.add(coefficient, (n + s - k + 0.5,), (o + 0.5,), -t * t)
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        k, o = parity_split(f.n)
        return Singularities(gamma=[0.5 - k - o - s], sine=[0.5 - o - s])


class LaguerreRow(RowFormula):
    """Row 7: exp(-x^2) L_n^alpha(x^2)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R7

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        alpha = f.get("alpha")
        t = x.coords[0]
        coefficient = 4.0**s * gamma(s + 0.5) * gamma(n + s + alpha + 1) / math.factorial(n)
        series = SeriesSum()
        series.add(coefficient, (s + 0.5, n + s + alpha + 1), (0.5, s + alpha + 1), -t * t, regularized=True)
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[s + 0.5, f.n + s + f.get("alpha") + 1])


class BesselJRow(RowFormula):
    """Row 8: J_nu(2|x|)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R8

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        nu = f.get("nu")
        ax = abs(x.coords[0])
        z = -ax * ax
        denominator = sinpi((nu - 2 * s) / 2)
        series = SeriesSum()
        first = sinpi(nu / 2) * 2.0 ** (2 * s - nu) * SQRTPI * gamma(nu + 1) / denominator
        series.add(
            _scaled(first, ax, nu - 2 * s),
            (nu / 2 + 0.5, nu / 2 + 1),
            (nu / 2 - s + 0.5, nu / 2 - s + 1, nu + 1),
            z,
            regularized=True,
        )
        second = -sinpi(s) * gamma(2 * s + 1) * SQRTPI / denominator
        series.add(second, (s + 0.5, s + 1), (0.5, s - nu / 2 + 1, s + nu / 2 + 1), z, regularized=True)
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities(gamma=[2 * s + 1], sine=[(f.get("nu") - 2 * s) / 2])


def _quartic_tail(s: float, nu: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    upper = (s + 0.25, s + 0.5, s + 0.75, s + 1)
    lower = (0.5, s - nu / 2 + 0.5, s - nu / 2 + 1, s + nu / 2 + 0.5, s + nu / 2 + 1)
    return upper, lower


class BesselPhaseRow(RowFormula):
    """Rows 9 and 10: cos(phase+|x|) J_nu(|x|) and sin(phase+|x|) J_nu(|x|).

    sin(phase+|x|) is cos(phase - pi/2 + |x|), so both share one formula.
    """

    piecewise = False

    def __init__(self, row: RowId):
        self._row = row

    @property
    def row_id(self) -> RowId:
        return self._row

    def _phase(self, f: BasisFunction) -> float:
        phase = f.get("phase")
        return phase - math.pi / 2 if self._row == RowId.T1R10 else phase

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        nu = f.get("nu")
        phase = self._phase(f)
        ax = abs(x.coords[0])
        z = -ax * ax
        series = SeriesSum()

        odd_part = (
            2.0 ** (-nu)
            * (nu + 1)
            * math.sin(phase)
            * cospi(nu / 2)
            * (math.pi / 2)
            * gamma(nu + 1)
            * gamma(nu + 1.5)
            * 2.0 ** (2 * s - nu - 1)
            / cospi((nu - 2 * s + 2) / 2)
        )
        series.add(
            _scaled(odd_part, ax, nu - 2 * s + 1),
            (nu / 2 + 0.75, nu / 2 + 1, nu / 2 + 1.25, nu / 2 + 1.5),
            (1.5, nu / 2 - s + 1, nu / 2 - s + 1.5, nu + 1, nu + 1.5),
            z,
            regularized=True,
        )
        even_part = (
            -(2.0 ** (-nu))
            * math.cos(phase)
            * sinpi(nu / 2)
            * math.pi
            * gamma(nu + 0.5)
            * gamma(nu + 1)
            * 2.0 ** (2 * s - nu)
            / sinpi(s - nu / 2)
        )
        series.add(
            _scaled(even_part, ax, nu - 2 * s),
            (nu / 2 + 0.25, nu / 2 + 0.5, nu / 2 + 0.75, nu / 2 + 1),
            (0.5, nu / 2 - s + 0.5, nu / 2 - s + 1, nu + 0.5, nu + 1),
            z,
            regularized=True,
        )
        smooth = (
            4.0 ** (-3 * s)
            * PI_3_2
            * sinpi(s)
            * gamma(4 * s + 1)
            * math.cos(phase + math.pi * (nu / 2 - s))
            / (sinpi(s - nu / 2) * cospi(s - nu / 2))
        )
        upper, lower = _quartic_tail(s, nu)
        series.add(smooth, upper, lower, z, regularized=True)
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        nu = f.get("nu")
        return Singularities(gamma=[4 * s + 1], sine=[s - nu / 2, s - nu / 2 - 0.5, (nu - 2 * s + 1) / 2])

    def parameter_singular(self, f: BasisFunction) -> bool:
        return near_gamma_pole(f.get("nu") + 0.5)


class BesselProductRow(RowFormula):
    """Row 11: J_mu(|x|) J_nu(|x|)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R11

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        mu, nu = f.get("mu"), f.get("nu")
        half = (mu + nu) / 2
        ax = abs(x.coords[0])
        z = -ax * ax
        series = SeriesSum()
        oscillating = (
            -(2.0 ** (-mu - nu))
            * sinpi(half)
            * gamma(mu + nu + 1) ** 2
            * 2.0 ** (2 * s - mu - nu)
            * SQRTPI
            / cospi((mu + nu - 2 * s + 1) / 2)
        )
        series.add(
            _scaled(oscillating, ax, mu + nu - 2 * s),
            (half + 0.5, half + 0.5, half + 1, half + 1),
            (mu + 1, half - s + 0.5, half - s + 1, nu + 1, mu + nu + 1),
            z,
            regularized=True,
        )
        smooth = -(4.0 ** (-s)) * sinpi(s) * gamma(2 * s + 1) ** 2 * SQRTPI / sinpi(half - s)
        series.add(
            smooth,
            (s + 0.5, s + 0.5, s + 1, s + 1),
            (0.5, s - half + 1, s + (mu - nu) / 2 + 1, s + (nu - mu) / 2 + 1, s + half + 1),
            z,
            regularized=True,
        )
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        half = (f.get("mu") + f.get("nu")) / 2
        return Singularities(gamma=[2 * s + 1], sine=[half - s])


class BesselYRow(RowFormula):
    """Row 12: Y_nu(2|x|)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R12

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        nu = f.get("nu")
        ax = abs(x.coords[0])
        z = -ax * ax
        series = SeriesSum()
        smooth = (
            -SQRTPI
            * sinpi(s)
            * gamma(2 * s + 1)
            * cospi(s + nu / 2)
            / (sinpi((nu - 2 * s) / 2) * sinpi(nu / 2 + s))
        )
        series.add(smooth, (s + 0.5, s + 1), (0.5, s - nu / 2 + 1, s + nu / 2 + 1), z, regularized=True)
        negative = -gamma(1 - nu) * 2.0 ** (nu + 2 * s) * SQRTPI / (2 * cospi(nu / 2) * sinpi(nu / 2 + s))
        series.add(
            _scaled(negative, ax, -nu - 2 * s),
            (0.5 - nu / 2, 1 - nu / 2),
            (1 - nu, 0.5 - nu / 2 - s, 1 - nu / 2 - s),
            z,
            regularized=True,
        )
        positive = (
            -sinpi(nu / 2) * cospi(nu) * gamma(nu + 1) * 2.0 ** (2 * s - nu) * SQRTPI / (sinpi(nu) * sinpi(s - nu / 2))
        )
        series.add(
            _scaled(positive, ax, nu - 2 * s),
            (nu / 2 + 0.5, nu / 2 + 1),
            (nu / 2 - s + 0.5, nu / 2 - s + 1, nu + 1),
            z,
            regularized=True,
        )
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        nu = f.get("nu")
        return Singularities(gamma=[2 * s + 1], sine=[(nu - 2 * s) / 2, nu / 2 + s, s - nu / 2])

    def parameter_singular(self, f: BasisFunction) -> bool:
        return near_integer(f.get("nu"))


class CosineBesselYRow(RowFormula):
    """Row 13: cos(|x|) Y_nu(|x|)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R13

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        nu = f.get("nu")
        ax = abs(x.coords[0])
        z = -ax * ax
        series = SeriesSum()
        negative = (
            -(2.0 ** (nu - 1))
            * math.pi
            * gamma(0.5 - nu)
            * gamma(1 - nu)
            * 2.0 ** (nu + 2 * s)
            / (cospi(nu / 2) * sinpi(nu / 2 + s))
        )
        series.add(
            _scaled(negative, ax, -nu - 2 * s),
            (0.25 - nu / 2, 0.5 - nu / 2, 0.75 - nu / 2, 1 - nu / 2),
            (0.5, 0.5 - nu, 1 - nu, 0.5 - nu / 2 - s, 1 - nu / 2 - s),
            z,
            regularized=True,
        )
        smooth = (
            -(4.0 ** (-3 * s))
            * PI_3_2
            * sinpi(s)
            * gamma(4 * s + 1)
            * cospi(nu / 2 + s)
            / (sinpi((nu - 2 * s) / 2) * sinpi(nu / 2 + s))
        )
        upper, lower = _quartic_tail(s, nu)
        series.add(smooth, upper, lower, z, regularized=True)
        positive = (
            -(2.0 ** (-nu))
            * sinpi(nu / 2)
            * cospi(nu)
            * math.pi
            * gamma(nu + 0.5)
            * gamma(nu + 1)
            * 2.0 ** (2 * s - nu)
            / (sinpi(nu) * sinpi(s - nu / 2))
        )
        series.add(
            _scaled(positive, ax, nu - 2 * s),
            (nu / 2 + 0.25, nu / 2 + 0.5, nu / 2 + 0.75, nu / 2 + 1),
            (0.5, nu / 2 - s + 0.5, nu / 2 - s + 1, nu + 0.5, nu + 1),
            z,
            regularized=True,
        )
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        nu = f.get("nu")
        return Singularities(gamma=[4 * s + 1], sine=[nu / 2 + s, (nu - 2 * s) / 2])

    def parameter_singular(self, f: BasisFunction) -> bool:
        return near_integer(2 * f.get("nu"))


class SineBesselYRow(RowFormula):
    """Row 14: sin(|x|) Y_nu(|x|)."""

    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R14

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        nu = f.get("nu")
        ax = abs(x.coords[0])
        z = -ax * ax
        series = SeriesSum()
        positive = (
            2.0 ** (-nu)
            * (nu + 1)
            * cospi(nu / 2)
            * cospi(nu)
            * (math.pi / 2)
            * gamma(nu + 1)
            * gamma(nu + 1.5)
            * 2.0 ** (2 * s - nu - 1)
            / (sinpi(nu) * cospi(s - nu / 2))
        )
        series.add(
            _scaled(positive, ax, nu - 2 * s + 1),
            (nu / 2 + 0.75, nu / 2 + 1, nu / 2 + 1.25, nu / 2 + 1.5),
            (1.5, nu / 2 - s + 1, nu / 2 - s + 1.5, nu + 1, nu + 1.5),
            z,
            regularized=True,
        )
        negative = (
            -(2.0 ** (nu - 1))
            * (nu - 1)
            * (math.pi / 2)
            * gamma(1 - nu)
            * gamma(1.5 - nu)
            * 2.0 ** (nu + 2 * s - 1)
            / (sinpi(nu / 2) * sinpi((nu + 2 * s - 1) / 2))
        )
        series.add(
            _scaled(negative, ax, -nu - 2 * s + 1),
            (0.75 - nu / 2, 1 - nu / 2, 1.25 - nu / 2, 1.5 - nu / 2),
            (1.5, 1 - nu, 1.5 - nu, 1 - nu / 2 - s, 1.5 - nu / 2 - s),
            z,
            regularized=True,
        )
        smooth = (
            4.0 ** (-3 * s)
            * PI_3_2
            * sinpi(s)
            * gamma(4 * s + 1)
            * sinpi(nu / 2 + s)
            / (cospi(nu / 2 + s) * cospi(s - nu / 2))
        )
        upper, lower = _quartic_tail(s, nu)
        series.add(smooth, upper, lower, z, regularized=True)
        return _result(series, Branch.WHOLE_LINE)

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        nu = f.get("nu")
        return Singularities(
            gamma=[4 * s + 1], sine=[nu / 2 + s - 0.5, s - nu / 2 - 0.5, (nu + 2 * s - 1) / 2]
        )

    def parameter_singular(self, f: BasisFunction) -> bool:
        return near_integer(2 * f.get("nu"))


class _SpecialOrderRow(RowFormula):
    """Closed forms that replace a row at one particular order."""

    def singularities(self, f: BasisFunction, s: float) -> Singularities:
        return Singularities()


class JacobiEigenRow(_SpecialOrderRow):
    """Row 1 with s = a: (1-x^2)_+^s P_n^(s,s) is an eigenfunction on (-1, 1)."""

    special_tag = "1*"

    @property
    def row_id(self) -> RowId:
        return RowId.T1R1

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        t = x.coords[0]
        ax = abs(t)
        branch = self.branch_for(ax)
        if branch == Branch.INSIDE:
            eigenvalue = 4.0**s * gamma(s + k + 1) * gamma(n + s - k + 0.5) / (math.factorial(k) * gamma(n - k + 0.5))
            return FracResult(value=eigenvalue * jacobi_eval(n, s, s, t), branch_used=branch, terms_evaluated=n + 1)
        tail = (n - 1) // 2
        coefficient = (
            -sinpi(s)
            * _odd(t, o)
            * gamma(n + s + 1)
            * gamma(n + 2 * s + 1)
            / (2.0**n * SQRTPI * math.factorial(n))
        )
        series = SeriesSum()
        series.add(
            _scaled(coefficient, ax, -2 * tail - 2 * s - 3),
            (s + tail + 1.5, s + k + 1),
            (n + s + 1.5,),
            1.0 / (t * t),
            regularized=True,
        )
        return _result(series, branch)


class JacobiHalfRow(_SpecialOrderRow):
    """Row 1 at s = 1/2."""

    special_tag = "1**"

    @property
    def row_id(self) -> RowId:
        return RowId.T1R1

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        a = f.get("a")
        t = x.coords[0]
        ax = abs(t)
        scale = polynomial_prefactor(f) * _odd(t, o)
        branch = self.branch_for(ax)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            coefficient = scale * 2 * (-1) ** k * math.factorial(k + o) * rgamma(a + k + 0.5)
            series.add(coefficient, (0.5 - a - k, n - k + 1), (o + 0.5,), t * t, regularized=True)
        else:
            tail = (n - 1) // 2
            # Negative: outside the support the image of a positive bump is negative.
            coefficient = -scale * 2.0 ** (-n) * math.factorial(n + 1) / SQRTPI
            series.add(
                _scaled(coefficient, ax, -2 * tail - 4),
                (k + 1.5, tail + 2),
                (a + n + 1.5,),
                1.0 / (t * t),
                regularized=True,
            )
        return _result(series, branch)


class JacobiMinusHalfRow(_SpecialOrderRow):
    """Row 1 at s = -1/2, n >= 1: the limiting logarithmic potential."""

    special_tag = "1***"

    @property
    def row_id(self) -> RowId:
        return RowId.T1R1

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        a = f.get("a")
        t = x.coords[0]
        ax = abs(t)
        scale = polynomial_prefactor(f) * _odd(t, o)
        branch = self.branch_for(ax)
        series = SeriesSum()
        if branch == Branch.INSIDE:
            coefficient = scale / 2 * (-1) ** k * math.factorial(k + o - 1) * rgamma(a + k + 1.5)
            series.add(coefficient, (-a - k - 0.5, n - k), (o + 0.5,), t * t, regularized=True)
        else:
            tail = (n - 1) // 2
            coefficient = scale * 2.0 ** (-n) * math.factorial(n - 1) / SQRTPI
            series.add(
                _scaled(coefficient, ax, -2 * (tail + 1)),
                (tail + 1, k + 0.5),
                (a + n + 1.5,),
                1.0 / (t * t),
                regularized=True,
            )
        return _result(series, branch)


class HermiteHalfRow(_SpecialOrderRow):
    """Row 6 at s = 1/2."""

    special_tag = "6*"
    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R6

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        t = x.coords[0]
        coefficient = 2.0 ** (n + 1) * (-1) ** k * math.factorial(k + o) * _odd(t, o)
        series = SeriesSum()
        series.add(coefficient, (k + o + 1,), (o + 0.5,), -t * t, regularized=True)
        return _result(series, Branch.WHOLE_LINE)


class HermiteMinusHalfRow(_SpecialOrderRow):
    """Row 6 at s = -1/2, n >= 1."""

    special_tag = "6**"
    piecewise = False

    @property
    def row_id(self) -> RowId:
        return RowId.T1R6

    def evaluate(self, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
        n = f.n
        k, o = parity_split(n)
        t = x.coords[0]
        coefficient = 2.0 ** (n - 1) * (-1) ** k * math.factorial(k + o - 1) * _odd(t, o)
        series = SeriesSum()
        series.add(coefficient, (n - k,), (o + 0.5,), -t * t, regularized=True)
        return _result(series, Branch.WHOLE_LINE)
