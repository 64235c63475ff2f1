"""Real-argument gamma family and generalized hypergeometric series."""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from fraclap.utils.errors import DivergenceError, NonConvergenceError, ParamError, PoleError

POLE_TOL = 1e-13
PFQ_TOL = 1e-14
PFQ_MAX_TERMS = 10_000
# 1F1 arguments below -KUMMER_SWITCH are summed after Kummer's transformation.
KUMMER_SWITCH = 1.0
POCHHAMMER_DIRECT_MAX = 64

# Lanczos approximation, g = 607/128, 15 coefficients.
_LANCZOS_G_HALF = 5.24218750000000000
_LANCZOS_SER0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005
_DIRECT_MAX = 140.0


def is_nonpositive_integer(z: float, tol: float = POLE_TOL) -> bool:
    """Return True if z is a non-positive integer within an absolute tolerance."""
    if z > tol:
        return False
    return abs(z - round(z)) <= tol


def nearest_integer_distance(z: float) -> float:
    return abs(z - round(z))


def parity_split(n: int) -> tuple[int, int]:
    """Split a degree into (floor(n/2), n - 2 floor(n/2))."""
    k = n // 2
    return k, n - 2 * k


def _lanczos_series(x: float) -> float:
    ser = _LANCZOS_SER0
    y = x
    for c in _LANCZOS_COF:
        y += 1.0
        ser += c / y
    return ser


def _lgamma_positive(x: float) -> float:
    t = x + _LANCZOS_G_HALF
    return (x + 0.5) * math.log(t) - t + math.log(_SQRT_2PI * _lanczos_series(x) / x)


def _gamma_positive(x: float) -> float:
    if x == int(x) and x <= 171:
        return float(math.factorial(int(x) - 1))
    if x > _DIRECT_MAX:
        return math.exp(_lgamma_positive(x))
    t = x + _LANCZOS_G_HALF
    return _SQRT_2PI * _lanczos_series(x) / x * math.pow(t, x + 0.5) * math.exp(-t)


def sinpi(z: float) -> float:
    """Return sin(pi z), reducing the argument on z so integers give exact zeros."""
    if not math.isfinite(z):
        return math.nan
    r = math.fmod(z, 2.0)
    if r < 0:
        r += 2.0
    n = round(2.0 * r)
    y = r - 0.5 * n
    quadrant = n % 4
    if quadrant == 0:
        return math.sin(math.pi * y)
    if quadrant == 1:
        return math.cos(math.pi * y)
    if quadrant == 2:
        return -math.sin(math.pi * y)
    return -math.cos(math.pi * y)


def cospi(z: float) -> float:
    """Return cos(pi z), exact zero at half-integers."""
    if not math.isfinite(z):
        return math.nan
    r = math.fmod(abs(z), 2.0)
    n = round(2.0 * r)
    y = r - 0.5 * n
    quadrant = n % 4
    if quadrant == 0:
        return math.cos(math.pi * y)
    if quadrant == 1:
        return -math.sin(math.pi * y)
    if quadrant == 2:
        return -math.cos(math.pi * y)
    return math.sin(math.pi * y)


def gamma(z: float) -> float:
    """Gamma function for real arguments.

    Args:
        z: Real argument, not a non-positive integer.

    Returns:
        Gamma(z).

    Raises:
        PoleError: If z is a non-positive integer within 1e-13.
    """
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma pole at z = {z!r}. Arguments must not be non-positive integers")
    if z >= 0.5:
        return _gamma_positive(z)
    # Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return math.pi / (sinpi(z) * _gamma_positive(1.0 - z))


def log_gamma_signed(z: float) -> tuple[float, int]:
    """Return (log|Gamma(z)|, sign Gamma(z)).

    Raises:
        PoleError: If z is a non-positive integer within 1e-13.
    """
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma pole at z = {z!r}. Arguments must not be non-positive integers")
    if z > 0:
        return _lgamma_positive(z), 1
    s = sinpi(z)
    log_abs = math.log(math.pi) - math.log(abs(s)) - _lgamma_positive(1.0 - z)
    return log_abs, 1 if s > 0 else -1


def rgamma(z: float) -> float:
    """Reciprocal gamma, an entire function: exactly 0 at the poles of Gamma."""
    if is_nonpositive_integer(z):
        return 0.0
    if abs(z) > _DIRECT_MAX:
        log_abs, sign = log_gamma_signed(z)
        return sign * math.exp(-log_abs)
    return 1.0 / gamma(z)


def pochhammer(z: float, k: int) -> float:
    """Rising factorial (z)_k = z (z+1) ... (z+k-1).

    Direct product for k <= 64; otherwise a gamma ratio in log space, taken
    only when -z is not a non-negative integer.
    """
    if k < 0:
        raise ParamError(f"Pochhammer index must be non-negative: {k}")
    if k <= POCHHAMMER_DIRECT_MAX or is_nonpositive_integer(z):
        result = 1.0
        for r in range(k):
            result *= z + r
        return result
    log_num, sign_num = log_gamma_signed(z + k)
    log_den, sign_den = log_gamma_signed(z)
    return sign_num * sign_den * math.exp(log_num - log_den)


def gamma_ratio(numerator: Sequence[float], denominator: Sequence[float]) -> float:
    """Return prod Gamma(numerator) / prod Gamma(denominator) assembled in log space.

    Poles in the denominator give an exact zero; poles in the numerator raise.
    """
    for z in denominator:
        if is_nonpositive_integer(z):
            return 0.0
    log_total = 0.0
    sign = 1
    for z in numerator:
        log_abs, s = log_gamma_signed(z)
        log_total += log_abs
        sign *= s
    for z in denominator:
        log_abs, s = log_gamma_signed(z)
        log_total -= log_abs
        sign *= s
    return sign * math.exp(log_total)


@dataclass(frozen=True)
class PFQParams:
    """Parameters of a generalized hypergeometric series pFq(upper; lower; argument)."""

    upper: tuple[float, ...] = field(default_factory=tuple)
    lower: tuple[float, ...] = field(default_factory=tuple)
    argument: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def termination_index(self) -> Optional[int]:
        """Index N of the last non-zero term if some upper parameter is -N, else None."""
        orders = [int(round(-a)) for a in self.upper if is_nonpositive_integer(a)]
        return min(orders) if orders else None


def _check_lower(params: PFQParams, stop: Optional[int]) -> None:
    for b in params.lower:
        if is_nonpositive_integer(b):
            blocking = int(round(-b))
            if stop is None or stop > blocking:
                raise ParamError(
                    f"Lower parameter {b!r} is a non-positive integer reached before the series terminates"
                )


def hyp2f1_unit(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) by the Gauss summation formula.

    Raises:
        DivergenceError: If c - a - b <= 0.
    """
    excess = c - a - b
    if excess <= 0:
        raise DivergenceError(f"2F1 at z = 1 diverges: c - a - b = {excess!r}. Requires c - a - b > 0")
    return gamma_ratio([c, excess], [c - a, c - b])


def pfq_with_count(params: PFQParams, tol: float = PFQ_TOL, max_terms: int = PFQ_MAX_TERMS) -> tuple[float, int]:
    """Evaluate pFq and report how many terms were summed.

    Returns:
        Tuple of (value, terms_evaluated).

    Raises:
        DivergenceError: p = q+1 with |z| >= 1, or p > q+1 with z != 0, for a non-terminating series.
        NonConvergenceError: More than max_terms terms were needed.
        ParamError: A lower parameter is a pole of the series.
    """
    z = params.argument
    stop = params.termination_index()
    _check_lower(params, stop)
    if z == 0.0 or stop == 0:
        return 1.0, 1

    if stop is None:
        if params.p == params.q + 1 and abs(z) >= 1.0:
            raise DivergenceError(
                f"{params.p}F{params.q} diverges at |z| = {abs(z)!r}. Requires |z| < 1"
            )
        if params.p > params.q + 1:
            raise DivergenceError(f"{params.p}F{params.q} diverges for z = {z!r} != 0")
        if params.p == 1 and params.q == 1 and z < -KUMMER_SWITCH:
            # Kummer: 1F1(a; b; z) = e^z 1F1(b - a; b; -z), positive terms for b > a
            a, b = params.upper[0], params.lower[0]
            value, count = pfq_with_count(PFQParams((b - a,), (b,), -z), tol=tol, max_terms=max_terms)
            return math.exp(z) * value, count

    term = 1.0
    total = 1.0
    small = 0
    k = 0
    limit = stop if stop is not None else max_terms
    while k < limit:
        ratio = z / (k + 1)
        for a in params.upper:
            ratio *= a + k
        for b in params.lower:
            ratio /= b + k
        term *= ratio
        total += term
        k += 1
        if stop is not None:
            continue
        if abs(term) < tol * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total, k + 1
        else:
            small = 0
    if stop is None:
        raise NonConvergenceError(
            f"{params.p}F{params.q} at z = {z!r} not converged after {max_terms} terms"
        )
    return total, k + 1


def pfq(params: PFQParams, tol: float = PFQ_TOL, max_terms: int = PFQ_MAX_TERMS) -> float:
    """Evaluate the generalized hypergeometric series pFq.

    Args:
        params: Upper and lower parameters and the argument.
        tol: Relative size below which three consecutive terms stop the sum.
        max_terms: Term budget for non-terminating series.

    Returns:
        The partial sum of the defining series.
    """
    value, _ = pfq_with_count(params, tol=tol, max_terms=max_terms)
    return value


def hyp(upper: Sequence[float], lower: Sequence[float], z: float) -> float:
    """Shorthand for pfq(PFQParams(upper, lower, z))."""
    return pfq(PFQParams(tuple(upper), tuple(lower), z))


def pfq_regularized_with_count(
    upper: Sequence[float],
    lower: Sequence[float],
    z: float,
    tol: float = PFQ_TOL,
    max_terms: int = PFQ_MAX_TERMS,
) -> tuple[float, int]:
    """Regularized series sum_k prod (a)_k z^k / (k! prod Gamma(b + k)).

    Entire in the lower parameters: a lower parameter -N silences the first
    N + 1 terms and the sum restarts at k0 = N + 1.

    Returns:
        Tuple of (value, terms_evaluated).
    """
    upper = tuple(float(a) for a in upper)
    lower = tuple(float(b) for b in lower)
    blocking = [int(round(-b)) for b in lower if is_nonpositive_integer(b)]
    if not blocking:
        value, count = pfq_with_count(PFQParams(upper, lower, z), tol=tol, max_terms=max_terms)
        for b in lower:
            value *= rgamma(b)
        return value, count

    k0 = max(blocking) + 1
    lead = 1.0
    for a in upper:
        lead *= pochhammer(a, k0)
    if lead == 0.0 or z == 0.0:
        return 0.0, 1
    lead *= z**k0 / math.factorial(k0)
    for b in lower:
        lead *= rgamma(b + k0)
    shifted = PFQParams((*(a + k0 for a in upper), 1.0), (k0 + 1.0, *(b + k0 for b in lower)), z)
    tail, count = pfq_with_count(shifted, tol=tol, max_terms=max_terms)
    return lead * tail, count + k0


def pfq_regularized(upper: Sequence[float], lower: Sequence[float], z: float) -> float:
    """Regularized pFq, i.e. pFq divided by prod Gamma(lower)."""
    value, _ = pfq_regularized_with_count(upper, lower, z)
    return value
