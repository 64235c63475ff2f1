"""Classical orthogonal polynomials, Bessel functions and the catalog of weighted basis functions."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence, Union

import numpy as np
from scipy import special as sp

from fraclap.utils.errors import DomainError, ParamError
from fraclap.utils.quadrature import gauss_jacobi, mapped_rule
from fraclap.utils.special_functions import (
    PFQParams,
    cospi,
    gamma_ratio,
    hyp,
    is_nonpositive_integer,
    nearest_integer_distance,
    parity_split,
    pfq,
    pochhammer,
    rgamma,
    sinpi,
)

ArrayLike = Union[float, np.ndarray]

# Beyond this argument the alternating Bessel power series loses too many digits.
BESSEL_SERIES_MAX = 12.0
BESSEL_Y_DELTA = 1e-3
BESSEL_Y_NEAR_INTEGER = 1e-4
HERMITE_CUTOFF = 20.0
LAGUERRE_CUTOFF = 120.0


class RowId(Enum):
    """Catalog rows with closed-form fractional Laplacians."""

    T1R1 = "T1R1"  # (1-x^2)_+^a P_n^(a,a)(x)
    T1R2 = "T1R2"  # (1-x^2)_+^(lam-1/2) C_n^lam(x)
    T1R3 = "T1R3"  # (1-x^2)_+^(-1/2) T_n(x)
    T1R4 = "T1R4"  # (1-x^2)_+^(1/2) U_n(x)
    T1R5 = "T1R5"  # (1-x^2)_+^a (x^2)^b P_n^(a,b)(2x^2-1)
    T1R6 = "T1R6"  # exp(-x^2) H_n(x)
    T1R7 = "T1R7"  # exp(-x^2) L_n^alpha(x^2)
    T1R8 = "T1R8"  # J_nu(2|x|)
    T1R9 = "T1R9"  # cos(phase+|x|) J_nu(|x|)
    T1R10 = "T1R10"  # sin(phase+|x|) J_nu(|x|)
    T1R11 = "T1R11"  # J_mu(|x|) J_nu(|x|)
    T1R12 = "T1R12"  # Y_nu(2|x|)
    T1R13 = "T1R13"  # cos(|x|) Y_nu(|x|)
    T1R14 = "T1R14"  # sin(|x|) Y_nu(|x|)
    HD_A = "HD_A"  # V_l (1-|x|^2)_+^a P_n^(a,b)(2|x|^2-1)
    HD_B = "HD_B"  # V_l exp(-|x|^2) L_n^alpha(|x|^2)
    HD_C = "HD_C"  # V_l (|x|^2-1)_+^a P_n^(a,b)(2|x|^2-1)
    HD_D = "HD_D"  # V_l (1-|x|^2)_+^a P_n^(a,b)(2/|x|^2-1)

    @property
    def is_higher_dimensional(self) -> bool:
        return self.value.startswith("HD_")


ROW_PARAMETERS: dict[RowId, tuple[str, ...]] = {
    RowId.T1R1: ("a",),
    RowId.T1R2: ("lam",),
    RowId.T1R3: (),
    RowId.T1R4: (),
    RowId.T1R5: ("a", "b"),
    RowId.T1R6: (),
    RowId.T1R7: ("alpha",),
    RowId.T1R8: ("nu",),
    RowId.T1R9: ("phase", "nu"),
    RowId.T1R10: ("phase", "nu"),
    RowId.T1R11: ("mu", "nu"),
    RowId.T1R12: ("nu",),
    RowId.T1R13: ("nu",),
    RowId.T1R14: ("nu",),
    RowId.HD_A: ("a", "b"),
    RowId.HD_B: ("alpha",),
    RowId.HD_C: ("a", "b"),
    RowId.HD_D: ("a", "b"),
}

ROW_DESCRIPTIONS: dict[RowId, str] = {
    RowId.T1R1: "weighted Jacobi (1-x^2)_+^a P_n^(a,a)(x)",
    RowId.T1R2: "weighted Gegenbauer (1-x^2)_+^(lam-1/2) C_n^lam(x)",
    RowId.T1R3: "weighted Chebyshev T (1-x^2)_+^(-1/2) T_n(x)",
    RowId.T1R4: "weighted Chebyshev U (1-x^2)_+^(1/2) U_n(x)",
    RowId.T1R5: "radial Jacobi (1-x^2)_+^a (x^2)^b P_n^(a,b)(2x^2-1)",
    RowId.T1R6: "Hermite function exp(-x^2) H_n(x)",
    RowId.T1R7: "Laguerre function exp(-x^2) L_n^alpha(x^2)",
    RowId.T1R8: "Bessel J_nu(2|x|)",
    RowId.T1R9: "cos(phase+|x|) J_nu(|x|)",
    RowId.T1R10: "sin(phase+|x|) J_nu(|x|)",
    RowId.T1R11: "Bessel product J_mu(|x|) J_nu(|x|)",
    RowId.T1R12: "Bessel Y_nu(2|x|)",
    RowId.T1R13: "cos(|x|) Y_nu(|x|)",
    RowId.T1R14: "sin(|x|) Y_nu(|x|)",
    RowId.HD_A: "ball Jacobi V_l (1-|x|^2)_+^a P_n^(a,b)(2|x|^2-1)",
    RowId.HD_B: "whole-space Laguerre V_l exp(-|x|^2) L_n^alpha(|x|^2)",
    RowId.HD_C: "ball complement V_l (|x|^2-1)_+^a P_n^(a,b)(2|x|^2-1)",
    RowId.HD_D: "reciprocal Jacobi V_l (1-|x|^2)_+^a P_n^(a,b)(2/|x|^2-1)",
}


def parse_row_id(value: Union[str, RowId]) -> RowId:
    """Look up a catalog row by its stable string id.

    Raises:
        ValueError: If the id is not a catalog row.
    """
    if isinstance(value, RowId):
        return value
    try:
        return RowId(value)
    except ValueError:
        raise ValueError(f"Unknown row id: {value}. Available: {[r.value for r in RowId]}") from None


@dataclass(frozen=True)
class BasisFunction:
    """A catalog function with its parameters.

    Attributes:
        row_id: Catalog row.
        n: Polynomial degree (ignored by the Bessel rows).
        params: Row symbols by name (a, b, alpha, lam, nu, mu, phase).
        d: Dimension, 1 for the one-dimensional rows.
        ell: Solid-harmonic degree for higher-dimensional rows.
        j: Fourier sign bit in d = 2.
    """

    row_id: RowId
    n: int = 0
    params: Mapping[str, float] = field(default_factory=dict)
    d: int = 1
    ell: int = 0
    j: int = 0

    def __post_init__(self):
        object.__setattr__(self, "row_id", parse_row_id(self.row_id))
        object.__setattr__(self, "params", {k: float(v) for k, v in self.params.items()})
        self.validate()

    def get(self, name: str) -> float:
        """Return a row parameter, raising ParamError if it was not supplied."""
        try:
            return self.params[name]
        except KeyError:
            raise ParamError(
                f"Missing parameter '{name}' for row {self.row_id.value}. "
                f"Required: {list(ROW_PARAMETERS[self.row_id])}"
            ) from None

    @property
    def parity(self) -> int:
        """Odd part n - 2 floor(n/2) of the degree."""
        return parity_split(self.n)[1]

    def validate(self) -> None:
        """Check parameter ranges for the row.

        Raises:
            ParamError: On a missing or out-of-range parameter.
        """
        row = self.row_id
        if self.n < 0:
            raise ParamError(f"Degree must be non-negative: {self.n}")
        if self.d < 1:
            raise ParamError(f"Dimension must be positive: {self.d}")
        for name in ROW_PARAMETERS[row]:
            self.get(name)
        if not row.is_higher_dimensional and self.d != 1:
            raise ParamError(f"Row {row.value} is one-dimensional, got d = {self.d}")
        if self.ell < 0:
            raise ParamError(f"Harmonic degree must be non-negative: {self.ell}")
        if self.j not in (0, 1):
            raise ParamError(f"Fourier sign must be 0 or 1: {self.j}")
        if self.ell == 0 and self.j != 0:
            raise ParamError("Fourier sign j must be 0 when ell = 0")
        if row.is_higher_dimensional and self.d == 1 and self.ell > 1:
            raise ParamError(f"Solid harmonics in d = 1 have degree 0 or 1, got {self.ell}")

        if row in (RowId.T1R1, RowId.T1R5, RowId.HD_A, RowId.HD_C, RowId.HD_D):
            if self.get("a") <= -1:
                raise ParamError(f"Jacobi parameter a must exceed -1: {self.get('a')}")
        if row in (RowId.T1R5, RowId.HD_A, RowId.HD_C, RowId.HD_D):
            if self.get("b") <= -1:
                raise ParamError(f"Jacobi parameter b must exceed -1: {self.get('b')}")
        if row == RowId.T1R2 and self.get("lam") <= -0.5:
            raise ParamError(f"Gegenbauer parameter lam must exceed -1/2: {self.get('lam')}")
        if row == RowId.T1R11:
            c = -self.get("mu") - self.get("nu") - 1
            if c > -1e-13 and nearest_integer_distance(c) <= 1e-13:
                raise ParamError(f"Row T1R11 requires -mu-nu-1 not a natural number, got {c}")


@dataclass(frozen=True)
class EvalPoint:
    """A point in R^d."""

    coords: tuple[float, ...]

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        if not coords or not all(math.isfinite(c) for c in coords):
            raise DomainError(f"Evaluation point must be a finite non-empty vector: {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: float) -> "EvalPoint":
        return cls(tuple(coords))

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def r(self) -> float:
        return math.sqrt(sum(c * c for c in self.coords))


def _as_output(x, value: np.ndarray) -> ArrayLike:
    return float(value) if np.ndim(x) == 0 else value


def jacobi_eval(n: int, a: float, b: float, x: ArrayLike) -> ArrayLike:
    """Evaluate the Jacobi polynomial P_n^(a,b)(x) by its three-term recurrence.

    Args:
        n: Degree.
        a: First parameter, > -1.
        b: Second parameter, > -1.
        x: Scalar or array argument. Values outside [-1, 1] are allowed.

    Returns:
        P_n^(a,b)(x) with the shape of x.

    Raises:
        ParamError: If a or b is <= -1 or n < 0.
    """
    if a <= -1 or b <= -1:
        raise ParamError(f"Jacobi parameters must exceed -1: a={a}, b={b}")
    if n < 0:
        raise ParamError(f"Degree must be non-negative: {n}")
    xs = np.asarray(x, dtype=float)
    prev = np.ones_like(xs)
    if n == 0:
        return _as_output(x, prev)
    cur = (a + 1) + 0.5 * (a + b + 2) * (xs - 1)
    ab = a + b
    for k in range(1, n):
        c = 2 * k + ab
        lead = 2 * (k + 1) * (k + ab + 1) * c
        nxt = ((c + 1) * ((c + 2) * c * xs + a * a - b * b) * cur - 2 * (k + a) * (k + b) * (c + 2) * prev) / lead
        prev, cur = cur, nxt
    return _as_output(x, cur)


def jacobi_at_one(n: int, a: float) -> float:
    """P_n^(a,b)(1) = (a+1)_n / n!."""
    return pochhammer(a + 1, n) / math.factorial(n)


def gegenbauer_eval(n: int, lam: float, x: ArrayLike) -> ArrayLike:
    """Evaluate C_n^lam(x) through its Jacobi renormalization."""
    if lam <= -0.5:
        raise ParamError(f"Gegenbauer parameter must exceed -1/2: {lam}")
    scale = pochhammer(2 * lam, n) / pochhammer(lam + 0.5, n)
    return scale * jacobi_eval(n, lam - 0.5, lam - 0.5, x)


def chebyshevT_eval(n: int, x: ArrayLike) -> ArrayLike:
    """Evaluate T_n(x) = P_n^(-1/2,-1/2)(x) / P_n^(-1/2,-1/2)(1)."""
    return jacobi_eval(n, -0.5, -0.5, x) / jacobi_at_one(n, -0.5)


def chebyshevU_eval(n: int, x: ArrayLike) -> ArrayLike:
    """Evaluate U_n(x) = (n+1) P_n^(1/2,1/2)(x) / P_n^(1/2,1/2)(1)."""
    return (n + 1) * jacobi_eval(n, 0.5, 0.5, x) / jacobi_at_one(n, 0.5)


def laguerre_eval(n: int, alpha: float, x: ArrayLike) -> ArrayLike:
    """Evaluate L_n^alpha(x) by the explicit finite sum."""
    if n < 0:
        raise ParamError(f"Degree must be non-negative: {n}")
    xs = np.asarray(x, dtype=float)
    total = np.zeros_like(xs)
    power = np.ones_like(xs)
    for k in range(n + 1):
        coef = (-1) ** k * pochhammer(alpha + k + 1, n - k) / (math.factorial(n - k) * math.factorial(k))
        total = total + coef * power
        power = power * xs
    return _as_output(x, total)


def hermite_eval(n: int, x: ArrayLike) -> ArrayLike:
    """Evaluate the physicist's Hermite polynomial H_n(x) by recurrence."""
    if n < 0:
        raise ParamError(f"Degree must be non-negative: {n}")
    xs = np.asarray(x, dtype=float)
    prev = np.ones_like(xs)
    if n == 0:
        return _as_output(x, prev)
    cur = 2 * xs
    for k in range(1, n):
        prev, cur = cur, 2 * xs * cur - 2 * k * prev
    return _as_output(x, cur)


def _besselJ_series(nu: float, x: float) -> float:
    half = 0.5 * x
    return half**nu * rgamma(nu + 1) * pfq(PFQParams((), (nu + 1,), -half * half))


def besselJ_eval(nu: float, x: float) -> float:
    """Bessel function of the first kind J_nu(x) for real order.

    Uses the power series (a 0F1 in -x^2/4) up to |x| = 12 and
    scipy.special.jv beyond.

    Raises:
        DomainError: For x < 0 with non-integer order, or x = 0 with
            negative non-integer order.
    """
    if x < 0:
        if nearest_integer_distance(nu) > 1e-13:
            raise DomainError(f"J_nu(x) for x < 0 requires integer order: nu = {nu}")
        k = int(round(nu))
        return (-1) ** (k % 2) * besselJ_eval(nu, -x)
    if is_nonpositive_integer(nu) and nu != 0:
        k = int(round(-nu))
        return (-1) ** (k % 2) * besselJ_eval(float(k), x)
    if x == 0:
        if abs(nu) <= 1e-13:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError(f"J_nu(0) is infinite for negative order: nu = {nu}")
    if x > BESSEL_SERIES_MAX:
        return float(sp.jv(nu, x))
    return _besselJ_series(nu, x)


def _besselY_formula(nu: float, x: float) -> float:
    return (cospi(nu) * besselJ_eval(nu, x) - besselJ_eval(-nu, x)) / sinpi(nu)


def _besselY_near_integer(k: int, offset: float, x: float) -> float:
    # Order derivatives at k from samples at k +- delta and k +- delta/2, Richardson-combined.
    delta = BESSEL_Y_DELTA
    p1, m1 = _besselY_formula(k + delta, x), _besselY_formula(k - delta, x)
    p2, m2 = _besselY_formula(k + delta / 2, x), _besselY_formula(k - delta / 2, x)
    centre = (2.0 * (p2 + m2) - 0.5 * (p1 + m1)) / 3.0
    if offset == 0:
        return centre
    slope = (4.0 * (p2 - m2) / delta - (p1 - m1) / (2 * delta)) / 3.0
    curvature = (p2 + m2 - 2.0 * centre) / (delta / 2) ** 2
    return centre + offset * slope + 0.5 * offset * offset * curvature


def besselY_eval(nu: float, x: float) -> float:
    """Bessel function of the second kind Y_nu(x), x > 0.

    Non-integer orders use (cos(nu pi) J_nu - J_-nu) / sin(nu pi). Orders
    within 1e-4 of an integer k are expanded to second order about k, with
    the order derivatives taken from symmetric perturbations k +- delta and
    k +- delta/2 and extrapolated in delta.

    Raises:
        DomainError: If x <= 0.
    """
    if x <= 0:
        raise DomainError(f"Y_nu(x) requires x > 0: x = {x}")
    if x > BESSEL_SERIES_MAX:
        return float(sp.yv(nu, x))
    k = round(nu)
    offset = nu - k
    if abs(offset) >= BESSEL_Y_NEAR_INTEGER:
        return _besselY_formula(nu, x)
    return _besselY_near_integer(k, offset, x)


def jacobi_connection(n: int, a: float, b: float, alpha: float, beta: float) -> list[float]:
    """Coefficients c_k with P_n^(a,b) = sum_k c_k P_k^(alpha,beta), k = 0..n.

    Each coefficient is a gamma-ratio prefactor times a terminating 3F2 at unit argument.

    Raises:
        ParamError: If any parameter is <= -1.
    """
    for name, value in (("a", a), ("b", b), ("alpha", alpha), ("beta", beta)):
        if value <= -1:
            raise ParamError(f"Jacobi parameter {name} must exceed -1: {value}")
    coeffs = []
    c = alpha + beta + 1
    for k in range(n + 1):
        prefactor = pochhammer(a + k + 1, n - k) * pochhammer(a + b + n + 1, k) / math.factorial(n - k)
        if k > 0:
            prefactor *= gamma_ratio([k + c], [2 * k + c])
        series = hyp([k - n, a + b + k + n + 1, k + alpha + 1], [a + k + 1, 2 * k + alpha + beta + 2], 1.0)
        coeffs.append(prefactor * series)
    return coeffs


def profile_power(z: ArrayLike, exponent: float) -> ArrayLike:
    """The profile function (z)_+^exponent: zero wherever z <= 0."""
    zs = np.asarray(z, dtype=float)
    safe = np.where(zs > 0, zs, 1.0)
    out = np.where(zs > 0, safe**exponent, 0.0)
    return _as_output(z, out)


def solid_harmonic(coords: Sequence[float], ell: int, j: int = 0) -> float:
    """Solid harmonic V_ell used by the higher-dimensional rows.

    d = 1: x^ell (ell in {0, 1}). d = 2: r^ell sin(ell theta + j pi/2),
    taken as 1 for ell = 0. d >= 3: the zonal harmonic
    |x|^ell C_ell^((d-2)/2)(x_1/|x|).
    """
    d = len(coords)
    if ell == 0:
        return 1.0
    if d == 1:
        if ell > 1:
            raise ParamError(f"Solid harmonics in d = 1 have degree 0 or 1, got {ell}")
        return float(coords[0])
    if d == 2:
        w = complex(coords[0], coords[1]) ** ell
        return w.real if j == 1 else w.imag
    r = math.sqrt(sum(c * c for c in coords))
    if r == 0:
        return 0.0
    return r**ell * gegenbauer_eval(ell, (d - 2) / 2, coords[0] / r)


def basis_eval(f: BasisFunction, x: EvalPoint) -> float:
    """Evaluate a catalog function, weight and harmonic factor included.

    Raises:
        ParamError: If the point dimension does not match the function.
    """
    if x.d != f.d:
        raise ParamError(f"Point dimension {x.d} does not match function dimension {f.d}")
    row = f.row_id
    n = f.n
    if row.is_higher_dimensional:
        return solid_harmonic(x.coords, f.ell, f.j) * _radial_value(f, x.r)

    t = x.coords[0]
    ax = abs(t)
    if row == RowId.T1R1:
        a = f.get("a")
        return profile_power(1 - t * t, a) * jacobi_eval(n, a, a, t)
    if row == RowId.T1R2:
        lam = f.get("lam")
        return profile_power(1 - t * t, lam - 0.5) * gegenbauer_eval(n, lam, t)
    if row == RowId.T1R3:
        return profile_power(1 - t * t, -0.5) * chebyshevT_eval(n, t)
    if row == RowId.T1R4:
        return profile_power(1 - t * t, 0.5) * chebyshevU_eval(n, t)
    if row == RowId.T1R5:
        a, b = f.get("a"), f.get("b")
        if ax >= 1:
            return 0.0
        if t == 0 and b < 0:
            raise DomainError(f"Row T1R5 with b < 0 is singular at x = 0: b = {b}")
        return (1 - t * t) ** a * (t * t) ** b * jacobi_eval(n, a, b, 2 * t * t - 1)
    if row == RowId.T1R6:
        return math.exp(-t * t) * hermite_eval(n, t)
    if row == RowId.T1R7:
        return math.exp(-t * t) * laguerre_eval(n, f.get("alpha"), t * t)
    if row == RowId.T1R8:
        return besselJ_eval(f.get("nu"), 2 * ax)
    if row == RowId.T1R9:
        return math.cos(f.get("phase") + ax) * besselJ_eval(f.get("nu"), ax)
    if row == RowId.T1R10:
        return math.sin(f.get("phase") + ax) * besselJ_eval(f.get("nu"), ax)
    if row == RowId.T1R11:
        return besselJ_eval(f.get("mu"), ax) * besselJ_eval(f.get("nu"), ax)
    if row == RowId.T1R12:
        return besselY_eval(f.get("nu"), 2 * ax)
    if row == RowId.T1R13:
        return math.cos(ax) * besselY_eval(f.get("nu"), ax)
    return math.sin(ax) * besselY_eval(f.get("nu"), ax)


def _radial_value(f: BasisFunction, r: float) -> float:
    row = f.row_id
    n = f.n
    rr = r * r
    if row == RowId.HD_A:
        a, b = f.get("a"), f.get("b")
        return profile_power(1 - rr, a) * jacobi_eval(n, a, b, 2 * rr - 1)
    if row == RowId.HD_B:
        return math.exp(-rr) * laguerre_eval(n, f.get("alpha"), rr)
    if row == RowId.HD_C:
        a, b = f.get("a"), f.get("b")
        return profile_power(rr - 1, a) * jacobi_eval(n, a, b, 2 * rr - 1)
    a, b = f.get("a"), f.get("b")
    if rr >= 1:
        return 0.0
    if rr == 0:
        # P_n(2/r^2 - 1) (1-r^2)^a grows like r^(-2n); finite only for n = 0
        if n == 0:
            return 1.0
        raise DomainError("Row HD_D with n > 0 is singular at the origin")
    return (1 - rr) ** a * jacobi_eval(n, a, b, 2 / rr - 1)


def radial_part(f: BasisFunction, r: float) -> float:
    """The factor multiplying V_ell for a higher-dimensional row."""
    if not f.row_id.is_higher_dimensional:
        raise ParamError(f"Row {f.row_id.value} has no radial factorization")
    return _radial_value(f, r)


def _family_weight_and_poly(family: str, params: Mapping[str, float]):
    if family == "jacobi":
        a, b = params["a"], params["b"]
        return (a, b), lambda k, x: jacobi_eval(k, a, b, x)
    if family == "gegenbauer":
        lam = params["lam"]
        return (lam - 0.5, lam - 0.5), lambda k, x: gegenbauer_eval(k, lam, x)
    if family == "chebyshevT":
        return (-0.5, -0.5), chebyshevT_eval
    if family == "chebyshevU":
        return (0.5, 0.5), chebyshevU_eval
    raise ParamError(f"Unknown family: {family}")


def orthogonality_matrix(family: str, N: int, params: Optional[Mapping[str, float]] = None, nodes: int = 200) -> np.ndarray:
    """Gram matrix of a 1D classical family against its weight, degrees 0..N.

    Jacobi-type families integrate with Gauss-Jacobi rules on [-1, 1].
    Hermite uses Gauss-Legendre on [-20, 20]; Laguerre uses Gauss-Legendre
    on [0, 120] since its degree-2N integrands outlive a cutoff at 20.

    Args:
        family: One of jacobi, gegenbauer, chebyshevT, chebyshevU, laguerre, hermite.
        N: Highest degree.
        params: Family parameters (a, b for jacobi; lam; alpha).
        nodes: Quadrature nodes.

    Returns:
        (N+1) x (N+1) symmetric matrix of weighted inner products.
    """
    params = dict(params or {})
    if family == "hermite":
        x, w = mapped_rule(-HERMITE_CUTOFF, HERMITE_CUTOFF, nodes)
        w = w * np.exp(-x * x)
        values = np.array([hermite_eval(k, x) for k in range(N + 1)])
    elif family == "laguerre":
        alpha = params.get("alpha", 0.0)
        x, w = mapped_rule(0.0, LAGUERRE_CUTOFF, nodes)
        w = w * np.exp(-x) * x**alpha
        values = np.array([laguerre_eval(k, alpha, x) for k in range(N + 1)])
    else:
        (wa, wb), poly = _family_weight_and_poly(family, params)
        x, w = gauss_jacobi(nodes, wa, wb)
        values = np.array([poly(k, x) for k in range(N + 1)])
    return (values * w) @ values.T
