"""Spectral solver for (-Delta)^s u = f with data on the unit disk or the interval (-1, 1).

The right-hand side is expanded in weighted generalized Zernike polynomials
(1-r^2)^(-s) Z^(-s)_{n,l,j}; each term has an explicit Riesz potential of
order s (the HD_A** closed form), so u is the same expansion with the
basis replaced by those potentials.
"""

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy import special as sp
from scipy.interpolate import CubicSpline

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, jacobi_eval
from fraclap.utils.errors import BranchError, ParamError, QuadratureError, ZernikeIndexError
from fraclap.utils.explicit_operators import riesz_apply
from fraclap.utils.oracle import OracleConfig, frac_lap_oracle_radial
from fraclap.utils.quadrature import gauss_jacobi, jacobi_norm
from fraclap.utils.special_functions import gamma, rgamma

ArrayLike = Union[float, np.ndarray]
DiskFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]

SCHEMA_VERSION = 1
# Coefficients below this fraction of the largest one are left out of the solution.
PRUNE_RELATIVE = 1e-14
PLOT_POINTS = 512
# Points on |x| = 1 are evaluated this far inside when the formula excludes the circle.
BOUNDARY_NUDGE = 1e-12


@dataclass(frozen=True, order=True)
class ZernikeIndex:
    """Degree n, Fourier mode ell and sign bit j of a generalized Zernike polynomial."""

    n: int
    ell: int
    j: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ZernikeIndexError(f"Degree must be non-negative: {self.n}")
        if not 0 <= self.ell <= self.n:
            raise ZernikeIndexError(f"Fourier mode must lie in [0, n]: ell={self.ell}, n={self.n}")
        if (self.n - self.ell) % 2:
            raise ZernikeIndexError(f"Fourier mode must have the parity of n: ell={self.ell}, n={self.n}")
        if self.j not in (0, 1):
            raise ZernikeIndexError(f"Sign bit must be 0 or 1: {self.j}")
        if self.ell == 0 and self.j != 0:
            raise ZernikeIndexError("Sign bit must be 0 when ell = 0")

    @property
    def radial_degree(self) -> int:
        return (self.n - self.ell) // 2


def zernike_indices(N: int) -> list[ZernikeIndex]:
    """All indices with n <= N, ordered by (n, ell, j)."""
    return [
        ZernikeIndex(n, ell, j)
        for n in range(N + 1)
        for ell in range(n % 2, n + 1, 2)
        for j in ((0,) if ell == 0 else (0, 1))
    ]


def angular_factor(x: ArrayLike, y: ArrayLike, ell: int, j: int) -> ArrayLike:
    """r^ell sin(ell theta + j pi/2), taken as 1 for ell = 0."""
    if ell == 0:
        return np.ones_like(np.asarray(x, dtype=float)) if np.ndim(x) else 1.0
    w = (np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)) ** ell
    value = np.real(w) if j == 1 else np.imag(w)
    return float(value) if np.ndim(value) == 0 else value


def zernike_eval(idx: ZernikeIndex, b: float, x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """Generalized Zernike polynomial Z^(b)_{n,ell,j}(x, y)."""
    rr = np.asarray(x, dtype=float) ** 2 + np.asarray(y, dtype=float) ** 2
    value = angular_factor(x, y, idx.ell, idx.j) * jacobi_eval(idx.radial_degree, b, idx.ell, 2 * rr - 1)
    return float(value) if np.ndim(value) == 0 else value


def _disk_weight(b: float, x: ArrayLike, y: ArrayLike) -> ArrayLike:
    rr = np.asarray(x, dtype=float) ** 2 + np.asarray(y, dtype=float) ** 2
    inside = rr < 1
    return np.where(inside, np.where(inside, 1 - rr, 1.0) ** b, 0.0)


@dataclass
class DiskExpansion:
    """Coefficients of f = sum c (1-r^2)^b Z^(b)_{n,ell,j} on the unit disk."""

    b_param: float
    N: int
    coeffs: dict[ZernikeIndex, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.N < 0:
            raise ParamError(f"Truncation degree must be non-negative: {self.N}")
        for idx in self.coeffs:
            if idx.n > self.N:
                raise ZernikeIndexError(f"Index {idx} exceeds the truncation degree {self.N}")

    def synthesize(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        """Evaluate the weighted expansion; zero outside the disk."""
        total = np.zeros(np.broadcast(np.asarray(x), np.asarray(y)).shape)
        for idx, c in self.coeffs.items():
            if c != 0.0:
                total = total + c * zernike_eval(idx, self.b_param, x, y)
        value = _disk_weight(self.b_param, x, y) * total
        return float(value) if np.ndim(value) == 0 else value

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "b": self.b_param,
            "N": self.N,
            "coeffs": [
                {"n": idx.n, "l": idx.ell, "j": idx.j, "value": value} for idx, value in sorted(self.coeffs.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "DiskExpansion":
        """Rebuild an expansion from to_dict output.

        Raises:
            ParamError: On a missing key or an unsupported schema version.
        """
        try:
            schema = data.get("schema", SCHEMA_VERSION)
            if schema != SCHEMA_VERSION:
                raise ParamError(f"Unsupported expansion schema: {schema}. Expected {SCHEMA_VERSION}")
            coeffs = {
                ZernikeIndex(int(c["n"]), int(c["l"]), int(c["j"])): float(c["value"]) for c in data["coeffs"]
            }
            return cls(b_param=float(data["b"]), N=int(data["N"]), coeffs=coeffs)
        except KeyError as e:
            raise ParamError(f"Expansion is missing key {e}") from None

    @classmethod
    def from_json(cls, text: str) -> "DiskExpansion":
        return cls.from_dict(json.loads(text))


def _analyze_mode(f: DiskFunction, b: float, N: int, ell: int) -> dict[ZernikeIndex, float]:
    radial_nodes = N + 20
    angular_nodes = 4 * N + 16
    t, w = gauss_jacobi(radial_nodes, b, float(ell))
    r = np.sqrt((1 + t) / 2)
    theta = 2 * math.pi * np.arange(angular_nodes) / angular_nodes
    x = r[:, None] * np.cos(theta)[None, :]
    y = r[:, None] * np.sin(theta)[None, :]
    samples = np.broadcast_to(np.asarray(f(x, y), dtype=float), x.shape)
    if not np.all(np.isfinite(samples)):
        raise QuadratureError(f"Right-hand side is not finite at a disk node for mode ell = {ell}")
    unweighted = samples / ((1 - r * r) ** b)[:, None]

    coeffs = {}
    norm_angle = 2 * math.pi if ell == 0 else math.pi
    for j in (0,) if ell == 0 else (0, 1):
        angle = np.ones_like(theta) if ell == 0 else np.sin(ell * theta + j * math.pi / 2)
        projection = (2 * math.pi / angular_nodes) * unweighted @ angle
        h = projection / r**ell
        for k in range((N - ell) // 2 + 1):
            numerator = float(np.sum(w * h * jacobi_eval(k, b, float(ell), t)))
            coeffs[ZernikeIndex(ell + 2 * k, ell, j)] = numerator / (norm_angle * jacobi_norm(k, b, float(ell)))
    return coeffs


def disk_analyze(f: DiskFunction, b: float, N: int, threads: int = 1) -> DiskExpansion:
    """Expand f in weighted Zernike polynomials (1-r^2)^b Z^(b)_{n,ell,j}, n <= N.

    Radial integrals use Gauss-Jacobi rules in t = 2r^2 - 1 with exponents
    (b, ell) and N + 20 nodes; angular integrals use the trapezoid rule with
    4N + 16 nodes, exact for the Fourier modes involved.

    Args:
        f: Right-hand side, vectorized over (x, y) arrays.
        b: Weight exponent, > -1.
        N: Truncation degree.
        threads: Modes analyzed in parallel.

    Raises:
        ParamError: If N < 0 or b <= -1.
        QuadratureError: If f is not finite at a node.
    """
    if N < 0:
        raise ParamError(f"Truncation degree must be non-negative: {N}")
    if b <= -1:
        raise ParamError(f"Weight exponent must exceed -1: {b}")
    ells = list(range(N + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ell: _analyze_mode(f, b, N, ell), ells))
    else:
        parts = [_analyze_mode(f, b, N, ell) for ell in ells]
    coeffs = {}
    for part in parts:
        coeffs.update(part)
    return DiskExpansion(b_param=b, N=N, coeffs=dict(sorted(coeffs.items())))


def ball_riesz_radial(k: int, ell: int, sigma: float, r: ArrayLike, d: int = 2) -> ArrayLike:
    """Radial factor of the Riesz potential of V_ell (1-|x|^2)_+^(-sigma) P_k^(-sigma, d/2+ell-1)(2|x|^2-1).

    Vectorized closed form: inside the ball it is a multiple of
    P_k^(-sigma, d/2+ell-1)(2r^2-1); outside it is a power of r times a 2F1
    in 1/r^2 (scipy.special.hyp2f1).
    """
    half = d / 2 + ell
    rs = np.asarray(r, dtype=float)
    scale = 4.0 ** (-sigma) * gamma(k + 1 - sigma) / math.factorial(k)
    inside = rs <= 1
    eigenvalue = scale * gamma(half + k - sigma) / gamma(half + k)
    inner = eigenvalue * jacobi_eval(k, -sigma, half - 1, 2 * rs * rs - 1)

    safe = np.where(inside, 2.0, rs)
    outer_coef = (-1) ** k * scale * gamma(half + k - sigma) * rgamma(sigma - k) * rgamma(half + 2 * k + 1 - sigma)
    outer = (
        outer_coef
        * safe ** (-2 * half - 2 * k + 2 * sigma)
        * sp.hyp2f1(k - sigma + 1, half + k - sigma, half + 2 * k + 1 - sigma, 1.0 / (safe * safe))
    )
    value = np.where(inside, inner, outer)
    return float(value) if np.ndim(value) == 0 else value


def _nudged(evaluate: Callable[[EvalPoint], float], point: EvalPoint) -> float:
    try:
        return evaluate(point)
    except BranchError:
        return evaluate(EvalPoint(tuple(c * (1 - BOUNDARY_NUDGE) for c in point.coords)))


class DiskSolution:
    """Whole-plane solution u of (-Delta)^s u = f for a disk expansion of f.

    Immutable after construction and safe to evaluate from several threads.
    """

    def __init__(self, expansion: DiskExpansion, s: float):
        if not 0 < s < 0.5:
            raise ParamError(f"Disk solver order must lie in (0, 1/2): {s}")
        if abs(expansion.b_param + s) > 1e-12:
            raise ParamError(f"Expansion weight {expansion.b_param} does not match -s = {-s}")
        self.expansion = expansion
        self.s = s
        largest = max((abs(c) for c in expansion.coeffs.values()), default=0.0)
        self.terms: list[tuple[ZernikeIndex, float]] = [
            (idx, c) for idx, c in sorted(expansion.coeffs.items()) if c != 0.0 and abs(c) > PRUNE_RELATIVE * largest
        ]
        # Plotting cache only; evaluation never reads it.
        self._splines: dict[tuple[int, int], tuple[CubicSpline, CubicSpline, float]] = {}

    def basis_function(self, idx: ZernikeIndex) -> BasisFunction:
        """The HD_A catalog function equal to (1-r^2)^(-s) Z^(-s)_idx."""
        return BasisFunction(
            RowId.HD_A,
            n=idx.radial_degree,
            params={"a": -self.s, "b": float(idx.ell)},
            d=2,
            ell=idx.ell,
            j=idx.j,
        )

    def modes(self) -> list[tuple[int, int]]:
        """Fourier modes (ell, j) with at least one retained coefficient."""
        return sorted({(idx.ell, idx.j) for idx, _ in self.terms})

    def __call__(self, x: float, y: float) -> float:
        """u(x, y) term by term through riesz_apply."""
        point = EvalPoint.of(x, y)
        total = 0.0
        for idx, c in self.terms:
            f = self.basis_function(idx)
            total += c * _nudged(lambda p: riesz_apply(f, self.s, p).value, point)
        return total

    def radial_profile(self, ell: int, j: int) -> Callable[[ArrayLike], ArrayLike]:
        """Vectorized radial factor R with u = sum over modes of r^ell sin(ell theta + j pi/2) R(r)."""
        members = [(idx.radial_degree, c) for idx, c in self.terms if idx.ell == ell and idx.j == j]

        def profile(r: ArrayLike) -> ArrayLike:
            total = np.zeros_like(np.asarray(r, dtype=float))
            for k, c in members:
                total = total + c * ball_riesz_radial(k, ell, self.s, r)
            return float(total) if np.ndim(total) == 0 else total

        return profile

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ArrayLike:
        """Vectorized u(x, y) from the radial profiles."""
        r = np.hypot(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        total = np.zeros_like(r)
        for ell, j in self.modes():
            total = total + angular_factor(x, y, ell, j) * self.radial_profile(ell, j)(r)
        return float(total) if np.ndim(total) == 0 else total

    def grid(self, nx: int, ny: int, half_width: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """u on a uniform nx x ny grid over [-half_width, half_width]^2, rows indexed by y."""
        xs = np.linspace(-half_width, half_width, nx)
        ys = np.linspace(-half_width, half_width, ny)
        X, Y = np.meshgrid(xs, ys)
        return xs, ys, self.evaluate(X, Y)

    def _mode_splines(self, ell: int, j: int, r_max: float) -> tuple[CubicSpline, CubicSpline]:
        cached = self._splines.get((ell, j))
        if cached is not None and cached[2] >= r_max:
            return cached[0], cached[1]
        profile = self.radial_profile(ell, j)
        r_in = np.linspace(0.0, 1.0, PLOT_POINTS // 2)
        r_out = np.linspace(1.0 + BOUNDARY_NUDGE, max(r_max, 1.0 + 1e-6), PLOT_POINTS // 2)
        inner, outer = CubicSpline(r_in, profile(r_in)), CubicSpline(r_out, profile(r_out))
        self._splines[(ell, j)] = (inner, outer, r_max)
        return inner, outer

    def plot_grid(self, nx: int, ny: int, half_width: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Like grid, but radial profiles come from 512-point piecewise-cubic interpolation.

        For plotting only; values are not exact.
        """
        xs = np.linspace(-half_width, half_width, nx)
        ys = np.linspace(-half_width, half_width, ny)
        X, Y = np.meshgrid(xs, ys)
        R = np.hypot(X, Y)
        r_max = half_width * math.sqrt(2)
        U = np.zeros_like(R)
        for ell, j in self.modes():
            inner, outer = self._mode_splines(ell, j, r_max)
            radial = np.where(R <= 1, inner(np.minimum(R, 1.0)), outer(np.maximum(R, 1.0)))
            U = U + angular_factor(X, Y, ell, j) * radial
        return xs, ys, U


def solve_fractional_disk(f: DiskFunction, s: float, N: int, threads: int = 1) -> DiskSolution:
    """Solve (-Delta)^s u = f on R^2 for f supported on the unit disk.

    Args:
        f: Right-hand side, vectorized over (x, y) arrays.
        s: Order in (0, 1/2); the expansion weight is (1-r^2)^(-s).
        N: Truncation degree.
        threads: Modes analyzed in parallel.

    Returns:
        DiskSolution evaluating u inside and outside the disk.

    Raises:
        ParamError: If s is outside (0, 1/2).
    """
    if not 0 < s < 0.5:
        raise ParamError(f"Disk solver order must lie in (0, 1/2): {s}")
    return DiskSolution(disk_analyze(f, -s, N, threads), s)


class IntervalSolution:
    """Solution u of (-Delta)^s u = f on R for f supported on (-1, 1)."""

    def __init__(self, coeffs: Sequence[float], s: float, weight: float):
        self.coeffs = [float(c) for c in coeffs]
        self.s = s
        self.weight = weight

    def basis_function(self, n: int) -> BasisFunction:
        return BasisFunction(RowId.T1R1, n=n, params={"a": self.weight})

    def synthesize(self, x: ArrayLike) -> ArrayLike:
        """The weighted Jacobi expansion of f."""
        xs = np.asarray(x, dtype=float)
        inside = np.abs(xs) < 1
        total = np.zeros_like(xs)
        for n, c in enumerate(self.coeffs):
            if c != 0.0:
                total = total + c * jacobi_eval(n, self.weight, self.weight, xs)
        value = np.where(inside, np.where(inside, 1 - xs * xs, 1.0) ** self.weight * total, 0.0)
        return float(value) if np.ndim(value) == 0 else value

    def __call__(self, x: float) -> float:
        point = EvalPoint.of(x)
        total = 0.0
        for n, c in enumerate(self.coeffs):
            if c == 0.0:
                continue
            f = self.basis_function(n)
            total += c * _nudged(lambda p: riesz_apply(f, self.s, p).value, point)
        return total


def solve_fractional_interval(
    f: Callable[[np.ndarray], np.ndarray], s: float, N: int, weight: Optional[float] = None
) -> IntervalSolution:
    """Solve (-Delta)^s u = f on R for f supported on (-1, 1).

    f is expanded in (1-x^2)^a P_n^(a,a)(x), n <= N, with a = weight
    (default s), by Gauss-Jacobi quadrature with N + 20 nodes; u sums the
    explicit Riesz potentials of the basis.

    Raises:
        ParamError: If s is outside (0, 1/2) or the weight is <= -1.
        QuadratureError: If f is not finite at a node.
    """
    if not 0 < s < 0.5:
        raise ParamError(f"Interval solver order must lie in (0, 1/2): {s}")
    a = s if weight is None else weight
    if a <= -1:
        raise ParamError(f"Weight exponent must exceed -1: {a}")
    t, w = gauss_jacobi(N + 20, a, a)
    samples = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)
    if not np.all(np.isfinite(samples)):
        raise QuadratureError("Right-hand side is not finite at an interval node")
    unweighted = samples / (1 - t * t) ** a
    coeffs = [float(np.sum(w * unweighted * jacobi_eval(n, a, a, t))) / jacobi_norm(n, a, a) for n in range(N + 1)]
    return IntervalSolution(coeffs, s, a)


@dataclass
class ResidualReport:
    """Oracle residuals of a disk solution at sample points."""

    points: list[tuple[float, float]]
    lhs: list[float]
    rhs: list[float]
    residuals: list[float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def disk_residual(
    solution: DiskSolution,
    f: DiskFunction,
    points: Sequence[tuple[float, float]],
    cfg: Optional[OracleConfig] = None,
) -> ResidualReport:
    """Compare the oracle fractional Laplacian of u with f at interior points.

    Each Fourier mode of u is handled by the radial oracle; residuals are
    |(-Delta)^s u - f| divided by max |f| over the sample points.
    """
    lhs, rhs = [], []
    for x, y in points:
        r = math.hypot(x, y)
        value = 0.0
        for ell, j in solution.modes():
            radial, _ = frac_lap_oracle_radial(solution.radial_profile(ell, j), solution.s, 2, ell, r, cfg, 1.0)
            value += float(angular_factor(x, y, ell, j)) * radial
        lhs.append(value)
        rhs.append(float(np.asarray(f(np.array(x), np.array(y)), dtype=float)))
    scale = max((abs(v) for v in rhs), default=0.0) or 1.0
    residuals = [abs(u - v) / scale for u, v in zip(lhs, rhs)]
    return ResidualReport(points=list(points), lhs=lhs, rhs=rhs, residuals=residuals)


def cubic_gaussian_rhs(x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """20 (1-r^2)^(-1/3) x^3 exp(-r^2) on the unit disk, zero outside."""
    xs, ys = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    rr = xs * xs + ys * ys
    value = 20 * _disk_weight(-1.0 / 3.0, xs, ys) * xs**3 * np.exp(-rr)
    return float(value) if np.ndim(value) == 0 else value


def interior_sample_points(count: int = 12, radius: float = 0.8) -> list[tuple[float, float]]:
    """Points on two rings inside the disk, away from the axes where modes vanish."""
    points = []
    for i in range(count):
        ring = radius if i % 2 == 0 else 0.5 * radius
        angle = 2 * math.pi * (i + 0.5) / count
        points.append((ring * math.cos(angle), ring * math.sin(angle)))
    return points
