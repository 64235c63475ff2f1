"""Reduction of Meijer-G records to sums of regularized hypergeometric series."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from mpmath import mp

from fraclap.utils.errors import (
    BranchError,
    DomainError,
    ParamError,
    PatternError,
    PoleError,
    UnsupportedSignature,
)
from fraclap.utils.meijerg.base import MeijerGSpec, argument_inversion
from fraclap.utils.special_functions import (
    POLE_TOL,
    gamma,
    hyp,
    pfq_regularized_with_count,
    rgamma,
    sinpi,
)

LOG_CASE_DPS = 30
INSIDE = "inside"
OUTSIDE = "outside"


@dataclass(frozen=True)
class HypergeometricTerm:
    """coefficient * w^power * F~(upper; lower; sign * w) with w = z or 1/z.

    F~ is the regularized series (pFq divided by prod Gamma(lower)).
    """

    coefficient: float
    power: float
    upper: tuple[float, ...]
    lower: tuple[float, ...]
    sign: int = 1
    variable: str = "z"
    regularized: bool = True

    def evaluate(self, z: float) -> tuple[float, int]:
        """Value of the term at z together with the number of series terms used."""
        if self.coefficient == 0.0:
            return 0.0, 0
        if self.variable == "1/z" and z == 0.0:
            raise DomainError("Outside expansion is undefined at z = 0")
        w = 1.0 / z if self.variable == "1/z" else z
        try:
            scale = w**self.power
        except ZeroDivisionError:
            raise DomainError(f"Term w^{self.power} is singular at w = 0") from None
        series, count = pfq_regularized_with_count(self.upper, self.lower, self.sign * w)
        return self.coefficient * scale * series, count


def _residue_terms(m: int, n: int, p: int, q: int, a: Sequence[float], b: Sequence[float], variable: str):
    """Residue series at the poles of Gamma(b_h - t), h < m, for |argument| small."""
    sign = -1 if (p - m - n) % 2 else 1
    terms = []
    for h in range(m):
        bh = b[h]
        coefficient = 1.0
        for j in range(m):
            if j == h:
                continue
            sine = sinpi(b[j] - bh)
            if abs(sine) <= POLE_TOL:
                raise PatternError(
                    f"Lower parameters {b[j]!r} and {bh!r} differ by an integer. Logarithmic case"
                )
            coefficient *= math.pi / sine
        try:
            for j in range(n):
                coefficient *= gamma(1.0 + bh - a[j])
        except PoleError:
            raise ParamError(
                f"Pole separation violated: an upper parameter minus {bh!r} is a positive integer"
            ) from None
        for j in range(n, p):
            coefficient *= rgamma(a[j] - bh)
        terms.append(
            HypergeometricTerm(
                coefficient=coefficient,
                power=bh,
                upper=tuple(1.0 + bh - v for v in a),
                lower=tuple(1.0 + bh - b[j] for j in range(q) if j != h),
                sign=sign,
                variable=variable,
            )
        )
    return terms


def to_hypergeometric(g: MeijerGSpec, branch: str) -> list[HypergeometricTerm]:
    """Express G^{m,n}_{p,q} as a sum of regularized hypergeometric terms.

    The inside branch sums residues at the first m lower parameters and
    converges for p < q (all z) or p = q (|z| < 1). The outside branch applies
    the same expansion after argument inversion, valid for p > q or p = q
    with |z| > 1; an empty sum there means the function vanishes.

    The terms are in the argument of g itself, so a reciprocal record is
    expanded in 1/|x|^2 exactly as written.

    Raises:
        PatternError: Integer-spaced parameters inside the residue group.
        UnsupportedSignature: The branch has no convergent expansion.
    """
    m, n, p, q = g.signature
    if branch == INSIDE:
        if p > q:
            raise UnsupportedSignature(f"No inside expansion for G^{m},{n}_{p},{q}: requires p <= q")
        return _residue_terms(m, n, p, q, g.a, g.b, "z")
    if branch == OUTSIDE:
        if p < q:
            raise UnsupportedSignature(f"No outside expansion for G^{m},{n}_{p},{q}: requires p >= q")
        inv = argument_inversion(g)
        return _residue_terms(inv.m, inv.n, inv.p, inv.q, inv.a, inv.b, "1/z")
    raise ValueError(f"Unknown branch: {branch}. Available: ['{INSIDE}', '{OUTSIDE}']")


def select_branch(g: MeijerGSpec, z: float) -> str:
    """Pick the convergent expansion for argument z.

    Raises:
        BranchError: p = q at z = 1, where neither series is summed.
    """
    if g.p < g.q:
        return INSIDE
    if g.p > g.q:
        return OUTSIDE
    if z < 1.0:
        return INSIDE
    if z > 1.0:
        return OUTSIDE
    raise BranchError(f"G^{g.m},{g.n}_{g.p},{g.q} at argument 1 lies on the branch circle")


def _sum_terms(g: MeijerGSpec, z: float, branch: str) -> tuple[float, int]:
    total = 0.0
    count = 0
    for term in to_hypergeometric(g, branch):
        value, used = term.evaluate(z)
        total += value
        count += used
    return total, count


def g_function_value(g: MeijerGSpec, z: float, branch: Optional[str] = None) -> tuple[float, int, bool]:
    """Bare G^{m,n}_{p,q}(z), without prefactor or monomial.

    Integer-spaced residue groups (the logarithmic case) are handed to
    mpmath.meijerg at LOG_CASE_DPS digits, which resolves the limit.

    Returns:
        Tuple of (value, terms_evaluated, logarithmic). terms_evaluated is 0
        when mpmath produced the value.
    """
    branch = branch or select_branch(g, z)
    try:
        value, count = _sum_terms(g, z, branch)
        return value, count, False
    except PatternError:
        with mp.workdps(LOG_CASE_DPS):
            value = mp.meijerg([list(g.a[: g.n]), list(g.a[g.n :])], [list(g.b[: g.m]), list(g.b[g.m :])], z)
        return float(mp.re(value)), 0, True


def meijerg_eval_with_info(g: MeijerGSpec, r: float, branch: Optional[str] = None) -> tuple[float, int, bool]:
    """prefactor * r^kappa * G(r^2) for r >= 0, with term count and logarithmic-case flag."""
    if r < 0:
        raise DomainError(f"Radius must be non-negative: {r}")
    if g.reciprocal:
        if r == 0:
            raise DomainError("Reciprocal-argument record is undefined at r = 0")
        z = 1.0 / (r * r)
    else:
        z = r * r
    value, count, perturbed = g_function_value(g, z, branch)
    if g.monomial_power:
        try:
            value *= r**g.monomial_power
        except ZeroDivisionError:
            raise DomainError(f"Monomial r^{g.monomial_power} is singular at r = 0") from None
    return g.prefactor * value, count, perturbed


def meijerg_eval(g: MeijerGSpec, r: float) -> float:
    """Evaluate prefactor * r^kappa * G^{m,n}_{p,q}(r^2) (1/r^2 for reciprocal records)."""
    value, _, _ = meijerg_eval_with_info(g, r)
    return value


def meijerg_eval_1d(g: MeijerGSpec, x: float) -> float:
    """One-dimensional value x^ell * meijerg_eval(g, |x|), ell being the odd part."""
    value = meijerg_eval(g, abs(x))
    return value * x**g.ell if g.ell else value


def pfq_as_meijerg(upper: Sequence[float], lower: Sequence[float]) -> MeijerGSpec:
    """Record whose value at z is pFq(upper; lower; -z).

    pFq(a; b; -z) = prod Gamma(b) / prod Gamma(a) * G^{1,p}_{p,q+1}(z | 1-a; 0, 1-b).
    The record is in z itself, so evaluate it through g_function_value.
    """
    p, q = len(upper), len(lower)
    prefactor = 1.0
    for v in lower:
        prefactor *= gamma(v)
    for v in upper:
        prefactor /= gamma(v)
    return MeijerGSpec(
        m=1,
        n=p,
        p=p,
        q=q + 1,
        a=tuple(1.0 - v for v in upper),
        b=(0.0, *(1.0 - v for v in lower)),
        prefactor=prefactor,
    )


# Closed-form reductions for small signatures, kept as independent checks of
# the generic expansion.


def _check_inside(z: float) -> None:
    if abs(z) >= 1.0:
        raise BranchError(f"Closed form needs |z| < 1, got {z}")


def reduce_1122(a: Sequence[float], b: Sequence[float], z: float) -> float:
    """G^{1,1}_{2,2}(z) by its single 2F1, on either side of the unit circle."""
    a1, a2 = a
    b1, b2 = b
    if z < 1.0:
        return (
            z**b1
            * gamma(1 - a1 + b1)
            * hyp([1 - a1 + b1, 1 - a2 + b1], [1 + b1 - b2], z)
            / (gamma(1 + b1 - b2) * gamma(a2 - b1))
        )
    return (
        z ** (a1 - 1)
        * gamma(1 - a1 + b1)
        * hyp([1 - a1 + b1, 1 - a1 + b2], [1 - a1 + a2], 1 / z)
        / (gamma(1 - a1 + a2) * gamma(a1 - b2))
    )


def reduce_1223(a: Sequence[float], b: Sequence[float], z: float) -> float:
    """G^{1,2}_{2,3}(z) by a single 2F2."""
    a1, a2 = a
    b1, b2, b3 = b
    return (
        z**b1
        * gamma(1 - a1 + b1)
        * gamma(1 - a2 + b1)
        * hyp([1 - a1 + b1, 1 - a2 + b1], [1 + b1 - b2, 1 + b1 - b3], -z)
        / (gamma(1 + b1 - b2) * gamma(1 + b1 - b3))
    )


def reduce_2123(a: Sequence[float], b: Sequence[float], z: float) -> float:
    """G^{2,1}_{2,3}(z) by two 2F2 terms."""
    a1, a2 = a
    b1, b2, b3 = b
    first = (
        z**b1
        * gamma(1 - a1 + b1)
        * hyp([1 - a1 + b1, 1 - a2 + b1], [1 + b1 - b2, 1 + b1 - b3], -z)
        / (gamma(1 + b1 - b2) * gamma(1 + b1 - b3) * gamma(a2 - b1))
    )
    second = (
        z**b2
        * gamma(1 - a1 + b2)
        * hyp([1 - a1 + b2, 1 - a2 + b2], [1 - b1 + b2, 1 + b2 - b3], -z)
        / (gamma(1 - b1 + b2) * gamma(1 + b2 - b3) * gamma(a2 - b2))
    )
    return math.pi / sinpi(b2 - b1) * (first - second)


def reduce_2124(a: Sequence[float], b: Sequence[float], z: float) -> float:
    """G^{2,1}_{2,4}(z) by two 2F3 terms."""
    a1, a2 = a
    b1, b2, b3, b4 = b
    first = (
        z**b1
        * gamma(1 - a1 + b1)
        * hyp([1 - a1 + b1, 1 - a2 + b1], [1 + b1 - b2, 1 + b1 - b3, 1 + b1 - b4], -z)
        / (gamma(1 + b1 - b2) * gamma(1 + b1 - b3) * gamma(1 + b1 - b4) * gamma(a2 - b1))
    )
    second = (
        z**b2
        * gamma(1 - a1 + b2)
        * hyp([1 - a1 + b2, 1 - a2 + b2], [1 - b1 + b2, 1 + b2 - b3, 1 + b2 - b4], -z)
        / (gamma(1 - b1 + b2) * gamma(1 + b2 - b3) * gamma(1 + b2 - b4) * gamma(a2 - b2))
    )
    return math.pi / sinpi(b2 - b1) * (first - second)


def reduce_2133(a: Sequence[float], b: Sequence[float], z: float) -> float:
    """G^{2,1}_{3,3}(z): two 3F2 terms inside, one 3F2 in 1/z outside."""
    a1, a2, a3 = a
    b1, b2, b3 = b
    if z < 1.0:
        first = (
            z**b1
            * gamma(1 - a1 + b1)
            * hyp([1 - a1 + b1, 1 - a2 + b1, 1 - a3 + b1], [1 + b1 - b2, 1 + b1 - b3], z)
            / (gamma(1 + b1 - b2) * gamma(1 + b1 - b3) * gamma(a2 - b1) * gamma(a3 - b1))
        )
        second = (
            z**b2
            * gamma(1 - a1 + b2)
            * hyp([1 - a1 + b2, 1 - a2 + b2, 1 - a3 + b2], [1 - b1 + b2, 1 + b2 - b3], z)
            / (gamma(1 - b1 + b2) * gamma(1 + b2 - b3) * gamma(a2 - b2) * gamma(a3 - b2))
        )
        return math.pi / sinpi(b2 - b1) * (first - second)
    return (
        z ** (a1 - 1)
        * gamma(1 - a1 + b1)
        * gamma(1 - a1 + b2)
        * hyp([1 - a1 + b1, 1 - a1 + b2, 1 - a1 + b3], [1 - a1 + a2, 1 - a1 + a3], 1 / z)
        / (gamma(1 - a1 + a2) * gamma(1 - a1 + a3) * gamma(a1 - b3))
    )


CLOSED_FORMS = {
    (1, 1, 2, 2): reduce_1122,
    (1, 2, 2, 3): reduce_1223,
    (2, 1, 2, 3): reduce_2123,
    (2, 1, 2, 4): reduce_2124,
    (2, 1, 3, 3): reduce_2133,
}
