"""Validity conditions and the parameter shift for (-Delta)^s of a Meijer-G record."""

import math
from dataclasses import dataclass, field, replace

from fraclap.utils.errors import ValidityError
from fraclap.utils.meijerg.base import MeijerGSpec, argument_inversion, multiplicative_shift

BOUNDARY_EXCLUSION = "|x| = 1"


@dataclass
class ValidityReport:
    """Outcome of checking a spec against the parameter-shift theorem.

    admissible implies failed_conditions is empty.
    """

    admissible: bool
    lambda_bar: float
    lambda_under: float
    failed_conditions: list[str] = field(default_factory=list)
    boundary_exclusions: list[str] = field(default_factory=list)
    case: str = "i"  # "i": p+q < 2m+2n, "ii": p+q = 2m+2n, "none": unbalanced

    @property
    def excludes_unit_sphere(self) -> bool:
        return BOUNDARY_EXCLUSION in self.boundary_exclusions


def _normalized(g: MeijerGSpec) -> MeijerGSpec:
    if g.reciprocal:
        g = argument_inversion(g)
    if g.monomial_power:
        g = multiplicative_shift(g, g.monomial_power / 2.0)
    return g


def lambda_bounds(g: MeijerGSpec) -> tuple[float, float]:
    """Return (lambda_bar, lambda_under) from the case split on p+q vs 2m+2n and p vs q.

    Empty maxima are -inf and empty minima +inf, so a missing group never
    constrains.
    """
    m, n, p, q = g.signature
    max_a = max(g.a[:n], default=-math.inf)
    min_b = min(g.b[:m], default=math.inf)
    upper_bound = 1.0 - max_a
    lower_bound = -min_b
    balance = 2 * m + 2 * n
    excess = sum(g.a) - sum(g.b) - 1.0

    if p + q < balance or (p + q == balance and p >= q):
        lambda_bar = upper_bound
    else:
        lambda_bar = min(upper_bound, 0.5 + excess / (q - p))

    if p + q < balance or (p + q == balance and p <= q):
        lambda_under = lower_bound
    else:
        lambda_under = max(lower_bound, 0.5 - excess / (p - q))
    return lambda_bar, lambda_under


def check_validity(g: MeijerGSpec, s: float) -> ValidityReport:
    """Check the hypotheses of the parameter-shift theorem for order s.

    s > 0 is the fractional Laplacian; s < 0 is the Riesz potential of order
    |s|, which additionally needs |s| < d/2. The kappa factor is folded into
    the parameters first, so the check sees V_ell * G(|x|^2) only.

    Args:
        g: Meijer-G record.
        s: Signed operator order.

    Returns:
        ValidityReport; failures are reported, never raised.
    """
    g = _normalized(g)
    lambda_bar, lambda_under = lambda_bounds(g)
    m, n, p, q = g.signature
    d, ell = g.d, g.ell
    failed: list[str] = []
    exclusions: list[str] = []

    if s == 0:
        failed.append("order_nonzero")
    sigma = -s
    riesz = s < 0
    if riesz and sigma >= d / 2:
        failed.append("order_below_half_dimension")

    if g.pole_separation_violations():
        failed.append("pole_separation")

    balance = 2 * m + 2 * n
    if p + q < balance:
        case = "i"
    elif p + q == balance:
        case = "ii"
    else:
        case = "none"
        failed.append("balance")

    max_a = max(g.a[:n], default=-math.inf)
    min_b = min(g.b[:m], default=math.inf)
    # With the signed order both theorems read (ell - 2 s) / 2 on the upper side.
    upper_threshold = (ell - 2.0 * s) / 2.0
    if not 1.0 - max_a > upper_threshold:
        failed.append("upper_parameters")
    if not min_b > -(d + ell) / 2.0:
        failed.append("lower_parameters")

    if case == "ii":
        if not lambda_bar > upper_threshold:
            failed.append("lambda_bar")
        if not lambda_under < (d + ell) / 2.0:
            failed.append("lambda_under")
        if p == q and not sum(g.a) - sum(g.b) > 1.0 + 2.0 * s:
            exclusions.append(BOUNDARY_EXCLUSION)

    return ValidityReport(
        admissible=not failed,
        lambda_bar=lambda_bar,
        lambda_under=lambda_under,
        failed_conditions=failed,
        boundary_exclusions=exclusions,
        case=case,
    )


def apply_fractional(g: MeijerGSpec, s: float) -> MeijerGSpec:
    """Spec of (-Delta)^s applied to V_ell * G, for signed s.

    Upper list (1-s-(d+2 ell)/2, a-s, -s), lower list (0, b-s, 1-(d+2 ell)/2),
    m and n raised by one, prefactor times 4^s. Negative s gives the Riesz
    potential with the mirrored +|s| shifts and 4^-|s|.

    Raises:
        ValidityError: If check_validity rejects the spec; carries the report.
    """
    report = check_validity(g, s)
    if not report.admissible:
        raise ValidityError(
            f"Parameter-shift theorem does not apply at s = {s}: failed {report.failed_conditions}",
            report,
        )
    g = _normalized(g)
    half = (g.d + 2 * g.ell) / 2.0
    return replace(
        g,
        m=g.m + 1,
        n=g.n + 1,
        p=g.p + 2,
        q=g.q + 2,
        a=(1.0 - s - half, *(v - s for v in g.a), -s),
        b=(0.0, *(v - s for v in g.b), 1.0 - half),
        prefactor=g.prefactor * 4.0**s,
        monomial_power=0.0,
    )
