"""Brute-force quadrature for the fractional Laplacian and the Riesz potential.

Both operators are written as integrals over the distance rho = |y - x|:

    (-Delta)^s f(x)      = C * int_0^inf rho^(-1-2s) (|S| f(x) - M(rho)) drho
    (-Delta)^(-sigma) f(x) = C' * int_0^inf rho^(2 sigma - 1) M(rho) drho

where M(rho) is the integral of f over the sphere of radius rho around x
(f(x + rho) + f(x - rho) in 1D). M(rho) - |S| f(x) is O(rho^2) for smooth f,
which removes the principal value. The window [0, h] around rho = 0 uses a
Gauss-Jacobi rule that absorbs the power of rho; the rest of the line is
split at the distances where f has kinks and covered by graded Gauss panels.
"""

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial.laguerre import laggauss
from scipy import special as sp

from fraclap.utils.classical_bases import (
    BasisFunction,
    RowId,
    chebyshevT_eval,
    chebyshevU_eval,
    gegenbauer_eval,
    hermite_eval,
    jacobi_eval,
    laguerre_eval,
    profile_power,
)
from fraclap.utils.errors import DomainError, ParamError, QuadratureError, UnsupportedDimension
from fraclap.utils.quadrature import graded_panels, geometric_far_panels, rule_on_panels, singular_start_rule
from fraclap.utils.special_functions import gamma, nearest_integer_distance

GRADING_RATIO = 0.15
GRADING_LEVELS = 20
# Width of the uniform far-field panels.
FAR_STEP = 2.0
# Radial rows evaluate M(rho) with this many radial nodes at once.
RADIAL_CHUNK = 256
# Below this distance the near-window integrand is replaced by its Taylor fit.
TAYLOR_RADIUS = 2e-3
# Far-field fits sample M on [cutoff, FAR_FIT_SPAN * cutoff].
FAR_FIT_SPAN = 3.0
FAR_FIT_SAMPLES = 2000
TAIL_LAGUERRE_NODES = 40

RealFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class OracleConfig:
    """Quadrature budget of the oracle.

    Attributes:
        split_radius: Largest window around rho = 0 handled by the Gauss-Jacobi rule.
        gauss_nodes: Nodes per panel in 1D (a quarter of it per radial panel in d > 1).
        far_cutoff: Distance rho at which the line is truncated.
        tol: Relative error target; QuadratureError above tol * max(1, |value|).
        richardson: Compare gauss_nodes with 2 * gauss_nodes (else gauss_nodes / 2).
        angular_nodes: Nodes per angular panel for the radial oracle.
    """

    split_radius: float = 0.5
    gauss_nodes: int = 120
    far_cutoff: float = 60.0
    tol: float = 1e-8
    richardson: bool = True
    angular_nodes: int = 32

    def __post_init__(self):
        if self.split_radius <= 0:
            raise ParamError(f"split_radius must be positive: {self.split_radius}")
        if self.far_cutoff <= 1 + self.split_radius:
            raise ParamError(
                f"far_cutoff must exceed 1 + split_radius: {self.far_cutoff} <= {1 + self.split_radius}"
            )
        if self.gauss_nodes < 4:
            raise ParamError(f"gauss_nodes must be at least 4: {self.gauss_nodes}")
        if self.angular_nodes < 4:
            raise ParamError(f"angular_nodes must be at least 4: {self.angular_nodes}")
        if self.tol <= 0:
            raise ParamError(f"tol must be positive: {self.tol}")

    @classmethod
    def quick(cls) -> "OracleConfig":
        """Reduced budget for smoke runs (verify --quick)."""
        return cls(gauss_nodes=48, far_cutoff=40.0, tol=1e-6, angular_nodes=24)

    def with_tol(self, tol: float) -> "OracleConfig":
        return replace(self, tol=tol)


def frac_lap_constant(d: int, s: float) -> float:
    """4^s Gamma(d/2 + s) / (pi^(d/2) |Gamma(-s)|)."""
    return 4.0**s * gamma(d / 2 + s) / (math.pi ** (d / 2) * abs(gamma(-s)))


def riesz_constant(d: int, sigma: float) -> float:
    """Gamma(d/2 - sigma) / (4^sigma pi^(d/2) Gamma(sigma))."""
    return gamma(d / 2 - sigma) / (4.0**sigma * math.pi ** (d / 2) * gamma(sigma))


def _sample(f: RealFunction, y: np.ndarray) -> np.ndarray:
    values = np.broadcast_to(np.asarray(f(y), dtype=float), y.shape)
    if not np.all(np.isfinite(values)):
        bad = y[~np.isfinite(values)]
        raise QuadratureError(f"Integrand is not finite at {bad[:3].tolist()}")
    return values


def _far_panels(h: float, cutoff: float, kinks: Sequence[float]) -> list[tuple[float, float]]:
    """Panels over [h, cutoff] graded toward h and toward every kink."""
    inner = sorted({k for k in kinks if h < k < cutoff})
    points = [h] + inner + [cutoff]
    panels = []
    for i, (lo, hi) in enumerate(zip(points[:-1], points[1:])):
        refine_hi = i < len(inner)
        if not refine_hi and hi - lo > FAR_STEP:
            panels += graded_panels(lo, lo + FAR_STEP, True, False, GRADING_RATIO, GRADING_LEVELS)
            panels += geometric_far_panels(lo + FAR_STEP, hi, FAR_STEP)
        else:
            panels += graded_panels(lo, hi, True, refine_hi, GRADING_RATIO, GRADING_LEVELS)
    return panels


def _window(kinks: Sequence[float], cfg: OracleConfig) -> float:
    if not kinks:
        return cfg.split_radius
    nearest = min(kinks)
    if nearest <= 0:
        raise DomainError("The oracle cannot evaluate at a point where f is not smooth. Move the point off the kink")
    return min(cfg.split_radius, 0.5 * nearest)


def _near_integrand(sphere_mean: RealFunction, level: float, u: np.ndarray, radius: float) -> np.ndarray:
    """(level - M(u)) / u^2, with its quadratic Taylor fit below radius.

    The difference loses all digits as u -> 0; the fit through radius and
    2 * radius keeps the error near radius^4.
    """
    values = (level - sphere_mean(u)) / (u * u)
    close = u < radius
    if np.any(close):
        anchors = np.array([radius, 2.0 * radius])
        g1, g2 = (level - sphere_mean(anchors)) / (anchors * anchors)
        values = np.where(close, g1 + (g2 - g1) / 3.0 * (u * u / (radius * radius) - 1.0), values)
    return values


@dataclass(frozen=True)
class FarField:
    """Large-rho form of M(rho) used past the cutoff.

    M(rho) ~ sum_k rho^-(leading + k) * (A_k + sum over frequencies w of
    B_kw cos(w rho) + C_kw sin(w rho)). The coefficients are fitted on
    [cutoff, FAR_FIT_SPAN * cutoff] and the model is integrated to infinity.

    Attributes:
        leading: Decay power of the slowest term.
        frequencies: Oscillation frequencies; 0 stands for the non-oscillating part.
        terms: Number of powers in the fit.
    """

    leading: float
    frequencies: tuple[float, ...]
    terms: int = 6


def _power_tail(q: float, cutoff: float, omega: float) -> complex:
    """int_cutoff^inf rho^-q exp(i omega rho) drho."""
    if omega == 0:
        if q <= 1:
            raise QuadratureError(f"Tail integral of rho^-{q:.3g} diverges")
        return complex(cutoff ** (1 - q) / (q - 1))
    # rho = cutoff + i v / omega turns the oscillation into exp(-v)
    v, w = laggauss(TAIL_LAGUERRE_NODES)
    values = (cutoff + 1j * v / omega) ** (-q)
    return complex(1j * np.exp(1j * omega * cutoff) / omega * np.sum(w * values))


def _fitted_tail(sphere_mean: RealFunction, kernel_power: float, cutoff: float, model: FarField, terms: int) -> float:
    rho = np.linspace(cutoff, FAR_FIT_SPAN * cutoff, FAR_FIT_SAMPLES)
    columns, integrals = [], []
    for k in range(terms):
        p = model.leading + k
        base = (cutoff / rho) ** p
        for omega in model.frequencies:
            tail = cutoff**p * _power_tail(p - kernel_power, cutoff, omega)
            if omega == 0:
                columns.append(base)
                integrals.append(tail.real)
            else:
                columns += [base * np.cos(omega * rho), base * np.sin(omega * rho)]
                integrals += [tail.real, tail.imag]
    coefficients, *_ = np.linalg.lstsq(np.column_stack(columns), sphere_mean(rho), rcond=None)
    return float(np.dot(coefficients, integrals))


def _far_field_tail(
    sphere_mean: RealFunction, kernel_power: float, cutoff: float, model: FarField
) -> tuple[float, float]:
    """int_cutoff^inf rho^kernel_power M(rho) drho from the fitted model, with the
    change from dropping the last power as error estimate."""
    full = _fitted_tail(sphere_mean, kernel_power, cutoff, model, model.terms)
    reduced = _fitted_tail(sphere_mean, kernel_power, cutoff, model, model.terms - 1)
    return full, abs(full - reduced)


def _laplacian_integral(
    sphere_mean: RealFunction,
    center: float,
    area: float,
    s: float,
    kinks: Sequence[float],
    nodes: int,
    cfg: OracleConfig,
    far_field: Optional[FarField] = None,
) -> tuple[float, float]:
    """int_0^inf rho^(-1-2s) (area * center - M(rho)) drho and the tail error estimate."""
    h = _window(kinks, cfg)
    u, w = singular_start_rule(h, 1.0 - 2 * s, nodes)
    near = float(np.sum(w * _near_integrand(sphere_mean, area * center, u, min(TAYLOR_RADIUS, 0.05 * h))))

    rho, wf = rule_on_panels(_far_panels(h, cfg.far_cutoff, kinks), nodes)
    m = sphere_mean(rho)
    far = float(np.sum(wf * rho ** (-1 - 2 * s) * m))

    if far_field is not None:
        tail, tail_err = _far_field_tail(sphere_mean, -1.0 - 2 * s, cfg.far_cutoff, far_field)
    else:
        last = m[-nodes:]
        tail_kernel = cfg.far_cutoff ** (-2 * s) / (2 * s)
        tail = float(last[-1]) * tail_kernel
        tail_err = float(np.max(last) - np.min(last)) * tail_kernel

    total = near + area * center * h ** (-2 * s) / (2 * s) - far - tail
    return total, tail_err


def _riesz_integral(
    sphere_mean: RealFunction,
    sigma: float,
    kinks: Sequence[float],
    nodes: int,
    cfg: OracleConfig,
    far_field: Optional[FarField] = None,
) -> tuple[float, float]:
    """int_0^inf rho^(2 sigma - 1) M(rho) drho and a tail error estimate."""
    h = _window(kinks, cfg)
    u, w = singular_start_rule(h, 2 * sigma - 1.0, nodes)
    near = float(np.sum(w * sphere_mean(u)))

    rho, wf = rule_on_panels(_far_panels(h, cfg.far_cutoff, kinks), nodes)
    m = sphere_mean(rho)
    far = float(np.sum(wf * rho ** (2 * sigma - 1) * m))

    if far_field is not None:
        tail, tail_err = _far_field_tail(sphere_mean, 2 * sigma - 1.0, cfg.far_cutoff, far_field)
        return near + far + tail, tail_err

    # Assumes M decays at least like 1/rho beyond the cutoff.
    envelope = float(np.max(np.abs(m[-nodes:])))
    tail_err = envelope * cfg.far_cutoff ** (2 * sigma) / (1 - 2 * sigma)
    return near + far, tail_err


def _doubled(evaluate: Callable[[int], tuple[float, float]], cfg: OracleConfig) -> tuple[float, float]:
    """Run a quadrature at two node counts; the difference is the error estimate."""
    if cfg.richardson:
        coarse_nodes, fine_nodes = cfg.gauss_nodes, 2 * cfg.gauss_nodes
    else:
        coarse_nodes, fine_nodes = max(cfg.gauss_nodes // 2, 2), cfg.gauss_nodes
    coarse, _ = evaluate(coarse_nodes)
    fine, tail_err = evaluate(fine_nodes)
    return fine, abs(fine - coarse) + tail_err


def _checked(value: float, err_est: float, cfg: OracleConfig, what: str) -> tuple[float, float]:
    if not math.isfinite(value) or not err_est <= cfg.tol * max(1.0, abs(value)):
        raise QuadratureError(
            f"{what}: error estimate {err_est:.3g} exceeds tolerance {cfg.tol:.3g} for value {value:.17g}",
            value=value,
            err_est=err_est,
        )
    return value, err_est


def _line_kinks(x: float, breakpoints: Sequence[float]) -> list[float]:
    return sorted({abs(b - x) for b in breakpoints})


def frac_lap_oracle_1d(
    f: RealFunction,
    s: float,
    x: float,
    cfg: Optional[OracleConfig] = None,
    breakpoints: Sequence[float] = (),
    far_field: Optional[FarField] = None,
) -> tuple[float, float]:
    """Fractional Laplacian of f at x by the singular integral.

    Args:
        f: Real function accepting numpy arrays (scalars broadcast).
        s: Order in (0, 1).
        x: Evaluation point; must not be one of the breakpoints.
        cfg: Quadrature budget.
        breakpoints: Points where f is not smooth (support ends, |x| kinks).
        far_field: Large-distance form of f(x + rho) + f(x - rho); without it the
            tail past far_cutoff is frozen at its last value.

    Returns:
        Tuple of (value, err_est).

    Raises:
        ParamError: If s is outside (0, 1).
        DomainError: If x is a breakpoint.
        QuadratureError: If err_est exceeds the tolerance.
    """
    cfg = cfg or OracleConfig()
    if not 0 < s < 1:
        raise ParamError(f"Oracle order must lie in (0, 1): {s}")
    center = float(_sample(f, np.array([x]))[0])

    def mean(rho: np.ndarray) -> np.ndarray:
        return _sample(f, x + rho) + _sample(f, x - rho)

    kinks = _line_kinks(x, breakpoints)
    value, err = _doubled(lambda n: _laplacian_integral(mean, center, 2.0, s, kinks, n, cfg, far_field), cfg)
    c = frac_lap_constant(1, s)
    return _checked(c * value, c * err, cfg, f"Fractional Laplacian at x = {x}")


def riesz_oracle_1d(
    f: RealFunction,
    sigma: float,
    x: float,
    cfg: Optional[OracleConfig] = None,
    breakpoints: Sequence[float] = (),
    far_field: Optional[FarField] = None,
) -> tuple[float, float]:
    """Riesz potential (-Delta)^(-sigma) f at x by the kernel integral.

    Args:
        f: Real function accepting numpy arrays, decaying or compactly supported.
        sigma: Order in (0, 1/2).
        x: Evaluation point.
        cfg: Quadrature budget.
        breakpoints: Points where f is not smooth.
        far_field: Large-distance form of f(x + rho) + f(x - rho) for slowly decaying f.

    Returns:
        Tuple of (value, err_est).

    Raises:
        ParamError: If sigma is outside (0, 1/2).
        QuadratureError: If err_est exceeds the tolerance.
    """
    cfg = cfg or OracleConfig()
    if not 0 < sigma < 0.5:
        raise ParamError(f"Riesz order in 1D must lie in (0, 1/2): {sigma}")

    def mean(rho: np.ndarray) -> np.ndarray:
        return _sample(f, x + rho) + _sample(f, x - rho)

    # The kernel is singular at rho = 0 but f is only sampled off x.
    kinks = [k for k in _line_kinks(x, breakpoints) if k > 0]
    value, err = _doubled(lambda n: _riesz_integral(mean, sigma, kinks, n, cfg, far_field), cfg)
    c = riesz_constant(1, sigma)
    return _checked(c * value, c * err, cfg, f"Riesz potential at x = {x}")


def _harmonic(y1: np.ndarray, y_perp: np.ndarray, ell: int, d: int) -> np.ndarray:
    """Solid harmonic of degree ell, cosine type in d = 2, zonal about the first axis in d = 3."""
    if ell == 0:
        return np.ones_like(y1)
    if d == 2:
        return np.real((y1 + 1j * y_perp) ** ell)
    r = np.hypot(y1, y_perp)
    safe = np.where(r > 0, r, 1.0)
    return np.where(r > 0, r**ell * gegenbauer_eval(ell, 0.5, y1 / safe), 0.0)


def frac_lap_oracle_radial(
    f_radial: RealFunction,
    s: float,
    d: int,
    ell: int,
    r: float,
    cfg: Optional[OracleConfig] = None,
    kink_radius: Optional[float] = None,
    far_field: Optional[FarField] = None,
) -> tuple[float, float]:
    """Radial factor of (-Delta)^s [V_ell(x) f_radial(|x|)] at |x| = r.

    The d-dimensional integral is taken at the point (r, 0, ...), with an
    angular Gauss rule on each sphere around it. The result is divided by
    V_ell(r, 0, ...) = r^ell.

    Args:
        f_radial: Radial factor accepting numpy arrays.
        s: Order in (0, 1).
        d: Dimension, 2 or 3.
        ell: Harmonic degree.
        r: Radius of the evaluation point.
        cfg: Quadrature budget.
        kink_radius: Radius of a sphere across which f is not smooth.
        far_field: Large-distance form of the sphere integral for slowly decaying or growing f.

    Returns:
        Tuple of (radial value, err_est).

    Raises:
        UnsupportedDimension: For d not in {2, 3}.
        DomainError: At r = 0 with ell > 0, or on the kink sphere.
        QuadratureError: If err_est exceeds the tolerance.
    """
    cfg = cfg or OracleConfig()
    if d not in (2, 3):
        raise UnsupportedDimension(f"Radial oracle supports d = 2 or 3, got {d}")
    if not 0 < s < 1:
        raise ParamError(f"Oracle order must lie in (0, 1): {s}")
    if r < 0:
        raise DomainError(f"Radius must be non-negative: {r}")
    if r == 0 and ell > 0:
        raise DomainError("The harmonic factor vanishes at the origin for ell > 0. Use r > 0")

    area = 2 * math.pi if d == 2 else 4 * math.pi
    center = float(_sample(f_radial, np.array([r]))[0]) * r**ell
    kinks = [] if kink_radius is None else sorted({abs(kink_radius - r), kink_radius + r})

    def mean_factory(n_ang: int) -> RealFunction:
        t, wt = rule_on_panels(graded_panels(0.0, 1.0, False, True, GRADING_RATIO, GRADING_LEVELS // 2), n_ang)

        def mean(rho: np.ndarray) -> np.ndarray:
            out = np.empty_like(rho)
            for start in range(0, rho.size, RADIAL_CHUNK):
                block = rho[start : start + RADIAL_CHUNK, None]
                if kink_radius is None or r == 0:
                    split = np.full_like(block, 0.5 * math.pi)
                else:
                    cos_split = (kink_radius**2 - r * r - block * block) / (2 * r * block)
                    split = np.arccos(np.clip(cos_split, -1.0, 1.0))
                # [0, split] graded toward split, then [split, pi] graded toward split.
                phi = np.concatenate([split * t, split + (math.pi - split) * (1.0 - t)], axis=1)
                weights = np.concatenate([split * wt, (math.pi - split) * wt], axis=1)
                y1 = r + block * np.cos(phi)
                y_perp = block * np.sin(phi)
                radius = np.hypot(y1, y_perp)
                values = _harmonic(y1, y_perp, ell, d) * _sample(f_radial, radius)
                if d == 2:
                    out[start : start + RADIAL_CHUNK] = 2.0 * np.sum(weights * values, axis=1)
                else:
                    out[start : start + RADIAL_CHUNK] = 2 * math.pi * np.sum(weights * np.sin(phi) * values, axis=1)
            return out

        return mean

    radial_nodes = max(cfg.gauss_nodes // 4, 8)

    def evaluate(n: int) -> tuple[float, float]:
        scale = n / cfg.gauss_nodes
        mean = mean_factory(max(int(cfg.angular_nodes * scale), 4))
        return _laplacian_integral(mean, center, area, s, kinks, max(int(radial_nodes * scale), 4), cfg, far_field)

    value, err = _doubled(evaluate, cfg)
    c = frac_lap_constant(d, s) / (r**ell if ell > 0 else 1.0)
    return _checked(c * value, abs(c) * err, cfg, f"Radial fractional Laplacian at r = {r}")


def _vector_radial(f: BasisFunction) -> RealFunction:
    row = f.row_id
    n = f.n

    def radial(r: np.ndarray) -> np.ndarray:
        rr = r * r
        if row == RowId.HD_A:
            a, b = f.get("a"), f.get("b")
            return profile_power(1 - rr, a) * jacobi_eval(n, a, b, 2 * rr - 1)
        if row == RowId.HD_B:
            return np.exp(-rr) * laguerre_eval(n, f.get("alpha"), rr)
        if row == RowId.HD_C:
            a, b = f.get("a"), f.get("b")
            return profile_power(rr - 1, a) * jacobi_eval(n, a, b, 2 * rr - 1)
        a, b = f.get("a"), f.get("b")
        inside = (rr > 0) & (rr < 1)
        safe = np.where(inside, rr, 0.5)
        values = (1 - safe) ** a * jacobi_eval(n, a, b, 2 / safe - 1)
        return np.where(inside, values, np.where(rr == 0, 1.0 if n == 0 else np.inf, 0.0))

    return radial


def radial_callable(f: BasisFunction) -> RealFunction:
    """Vectorized radial factor of a higher-dimensional catalog row."""
    if not f.row_id.is_higher_dimensional:
        raise ParamError(f"Row {f.row_id.value} has no radial factorization")
    return _vector_radial(f)


def basis_callable(f: BasisFunction) -> RealFunction:
    """Vectorized evaluator of a one-dimensional catalog function.

    Bessel rows use scipy.special.jv / yv so the oracle can sample on whole panels.
    """
    if f.d != 1:
        raise ParamError(f"basis_callable is one-dimensional, got d = {f.d}. Use radial_callable")
    row = f.row_id
    n = f.n
    if row.is_higher_dimensional:
        radial = _vector_radial(f)
        return lambda y: (y**f.ell) * radial(np.abs(y))

    def evaluate(y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        ay = np.abs(y)
        if row == RowId.T1R1:
            a = f.get("a")
            return profile_power(1 - y * y, a) * jacobi_eval(n, a, a, y)
        if row == RowId.T1R2:
            lam = f.get("lam")
            return profile_power(1 - y * y, lam - 0.5) * gegenbauer_eval(n, lam, y)
        if row == RowId.T1R3:
            return profile_power(1 - y * y, -0.5) * chebyshevT_eval(n, y)
        if row == RowId.T1R4:
            return profile_power(1 - y * y, 0.5) * chebyshevU_eval(n, y)
        if row == RowId.T1R5:
            a, b = f.get("a"), f.get("b")
            inside = ay < 1
            return np.where(
                inside,
                profile_power(1 - y * y, a) * np.abs(y) ** (2 * b) * jacobi_eval(n, a, b, 2 * y * y - 1),
                0.0,
            )
        if row == RowId.T1R6:
            return np.exp(-y * y) * hermite_eval(n, y)
        if row == RowId.T1R7:
            return np.exp(-y * y) * laguerre_eval(n, f.get("alpha"), y * y)
        if row == RowId.T1R8:
            return sp.jv(f.get("nu"), 2 * ay)
        if row == RowId.T1R9:
            return np.cos(f.get("phase") + ay) * sp.jv(f.get("nu"), ay)
        if row == RowId.T1R10:
            return np.sin(f.get("phase") + ay) * sp.jv(f.get("nu"), ay)
        if row == RowId.T1R11:
            return sp.jv(f.get("mu"), ay) * sp.jv(f.get("nu"), ay)
        if row == RowId.T1R12:
            return sp.yv(f.get("nu"), 2 * ay)
        if row == RowId.T1R13:
            return np.cos(ay) * sp.yv(f.get("nu"), ay)
        return np.sin(ay) * sp.yv(f.get("nu"), ay)

    return evaluate


def basis_breakpoints(f: BasisFunction) -> tuple[float, ...]:
    """Points on the line where a one-dimensional catalog function is not smooth."""
    row = f.row_id
    if row in (RowId.T1R6, RowId.T1R7) or row == RowId.HD_B:
        return ()
    if row in (RowId.T1R1, RowId.T1R2, RowId.T1R3, RowId.T1R4):
        return (-1.0, 1.0)
    if row == RowId.T1R5:
        if nearest_integer_distance(f.get("b")) > 1e-13:
            return (-1.0, 0.0, 1.0)
        return (-1.0, 1.0)
    if row.is_higher_dimensional:
        return (-1.0, 1.0)
    # |x| enters the Bessel rows.
    return (0.0,)


def basis_far_field(f: BasisFunction) -> Optional[FarField]:
    """Far-field form of the sphere mean for the Bessel rows and the ball complement, None otherwise."""
    row = f.row_id
    if row == RowId.HD_C:
        # (|y|^2 - 1)^a P_n grows like |y|^(2a + 2n); the harmonic adds ell
        return FarField(leading=-(2 * f.get("a") + 2 * f.n + f.ell), frequencies=(0.0,))
    if row in (RowId.T1R8, RowId.T1R12):
        return FarField(leading=0.5, frequencies=(2.0,))
    if row in (RowId.T1R9, RowId.T1R10, RowId.T1R13, RowId.T1R14):
        return FarField(leading=0.5, frequencies=(0.0, 2.0))
    if row == RowId.T1R11:
        return FarField(leading=1.0, frequencies=(0.0, 2.0))
    return None


def oracle_frac_apply(f: BasisFunction, s: float, x: float, cfg: Optional[OracleConfig] = None) -> tuple[float, float]:
    """Oracle counterpart of frac_apply for a catalog function at a point.

    In 1D x is the coordinate; in d = 2, 3 it is the radius and the full
    value V_ell(x) * radial is returned at (x, 0, ...) for the harmonic
    oriented along the first axis.

    Raises:
        ParamError: If s is not in (0, 1) or in (-1/2, 0) in 1D.
    """
    if f.d == 1:
        if s > 0:
            return frac_lap_oracle_1d(basis_callable(f), s, x, cfg, basis_breakpoints(f), basis_far_field(f))
        return riesz_oracle_1d(basis_callable(f), -s, x, cfg, basis_breakpoints(f), basis_far_field(f))
    if s <= 0:
        raise ParamError(f"The radial oracle only evaluates the fractional Laplacian, got s = {s}")
    kink = None if f.row_id == RowId.HD_B else 1.0
    value, err = frac_lap_oracle_radial(radial_callable(f), s, f.d, f.ell, x, cfg, kink, basis_far_field(f))
    return value * x**f.ell, err * x**f.ell
