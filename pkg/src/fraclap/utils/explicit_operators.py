"""Row dispatch for the explicit fractional Laplacian and Riesz potential."""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Mapping, Optional, Sequence

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, parse_row_id
from fraclap.utils.errors import (
    BranchError,
    CorrectedFormWarning,
    NearPoleError,
    ParamError,
    PoleError,
    ValidityError,
)
from fraclap.utils.meijerg import catalog_spec, check_validity
from fraclap.utils.rows import (
    BallIndicatorRow,
    BallJacobiEigenRow,
    BallJacobiRow,
    BallJacobiShiftedRow,
    BesselJRow,
    BesselPhaseRow,
    BesselProductRow,
    BesselYRow,
    CosineBesselYRow,
    FracResult,
    HermiteHalfRow,
    HermiteMinusHalfRow,
    HermiteRow,
    JacobiEigenRow,
    JacobiHalfRow,
    JacobiMinusHalfRow,
    JacobiWeightRow,
    LaguerreRow,
    MeijerGPathRow,
    RadialJacobiRow,
    RowFormula,
    SineBesselYRow,
    WholeSpaceLaguerreRow,
)
from fraclap.utils.rows.base import NEAR_POLE_THRESHOLD

SPECIAL_CASE_TOL = 1e-9
NEAR_POLE_STEP = 1e-5

# Closed forms at s = -1/2 in 1D, where the Riesz order reaches d/2.
LIMIT_TAGS = ("1***", "6**")

# Forms whose tabulated expression was corrected against the quadrature oracle.
CORRECTED_FORMS: dict[str, str] = {
    "T1R5": "the outside factor 2^(-2s) is dropped and the inside companion series is added",
    "T1R6": "the factor 2^n is restored",
    "1**": "the outside sign is restored",
    "1***": "the even-n additive constant is removed",
    "6*": "the factor 2^n and the sign (-1)^k are restored",
    "6**": "the factor 2^n is restored and the even-n additive constant is removed",
    "A***": "the outside exponent is -d-2l-2s",
}

# Special-case row ids: alias -> (catalog row, special tag).
ROW_ALIASES: dict[str, tuple[RowId, str]] = {
    "T5R1s": (RowId.T1R1, "1*"),
    "T5R1h": (RowId.T1R1, "1**"),
    "T5R1mh": (RowId.T1R1, "1***"),
    "T5R6h": (RowId.T1R6, "6*"),
    "T5R6mh": (RowId.T1R6, "6**"),
    "HD_As": (RowId.HD_A, "A*"),
    "HD_Ass": (RowId.HD_A, "A**"),
    "HD_Asss": (RowId.HD_A, "A***"),
}

_SPECIAL_FORMULAS: dict[str, RowFormula] = {
    "1*": JacobiEigenRow(),
    "1**": JacobiHalfRow(),
    "1***": JacobiMinusHalfRow(),
    "6*": HermiteHalfRow(),
    "6**": HermiteMinusHalfRow(),
    "A*": BallJacobiShiftedRow(),
    "A**": BallJacobiEigenRow(),
    "A***": BallIndicatorRow(),
}


def get_row(row_id) -> RowFormula:
    """Factory function to get the explicit formula of a catalog row.

    Args:
        row_id: RowId or its stable string ("T1R1" ... "HD_D")

    Returns:
        RowFormula instance for the row

    Raises:
        ValueError: If row_id is not recognized
    """
    rows = {
        RowId.T1R1: JacobiWeightRow(RowId.T1R1),
        RowId.T1R2: JacobiWeightRow(RowId.T1R2),
        RowId.T1R3: JacobiWeightRow(RowId.T1R3),
        RowId.T1R4: JacobiWeightRow(RowId.T1R4),
        RowId.T1R5: RadialJacobiRow(),
        RowId.T1R6: HermiteRow(),
        RowId.T1R7: LaguerreRow(),
        RowId.T1R8: BesselJRow(),
        RowId.T1R9: BesselPhaseRow(RowId.T1R9),
        RowId.T1R10: BesselPhaseRow(RowId.T1R10),
        RowId.T1R11: BesselProductRow(),
        RowId.T1R12: BesselYRow(),
        RowId.T1R13: CosineBesselYRow(),
        RowId.T1R14: SineBesselYRow(),
        RowId.HD_A: BallJacobiRow(),
        RowId.HD_B: WholeSpaceLaguerreRow(),
        RowId.HD_C: MeijerGPathRow(RowId.HD_C),
        RowId.HD_D: MeijerGPathRow(RowId.HD_D),
    }

    row = parse_row_id(row_id)
    if row not in rows:
        raise ValueError(f"Unknown row id: {row_id}. Available: {[r.value for r in rows]}")

    return rows[row]


def get_special_formula(tag: str) -> RowFormula:
    """Closed form registered under a special-case tag such as "1*"."""
    if tag not in _SPECIAL_FORMULAS:
        raise ValueError(f"Unknown special case: {tag}. Available: {list(_SPECIAL_FORMULAS.keys())}")
    return _SPECIAL_FORMULAS[tag]


def _close(u: float, v: float) -> bool:
    return abs(u - v) <= SPECIAL_CASE_TOL


def special_case_table(f: BasisFunction, s: float) -> Optional[str]:
    """Tag of the special closed form that applies to (f, s), if any.

    Precedence: exact eigenrelations (1*, A**) first, then the half-integer
    orders and the remaining ball cases.
    """
    row = f.row_id
    if row == RowId.T1R1:
        if _close(s, f.get("a")):
            return "1*"
        if _close(s, 0.5):
            return "1**"
        if _close(s, -0.5) and f.n >= 1:
            return "1***"
    elif row == RowId.T1R6:
        if _close(s, 0.5):
            return "6*"
        if _close(s, -0.5) and f.n >= 1:
            return "6**"
    elif row == RowId.HD_A:
        a, b = f.get("a"), f.get("b")
        shifted = _close(b, (f.d + 2 * f.ell - 2) / 2)
        if shifted and _close(a, s):
            return "A**"
        if f.n == 0 and _close(a, 0.0):
            return "A***"
        if shifted:
            return "A*"
    return None


def resolve_row(
    row_key: str,
    n: int = 0,
    params: Optional[Mapping[str, float]] = None,
    d: int = 1,
    ell: int = 0,
    j: int = 0,
    s: Optional[float] = None,
) -> tuple[BasisFunction, Optional[float]]:
    """Build the basis function named by a row id or special-case alias.

    Aliases pin the parameters (and for T5R1h/T5R1mh/T5R6h/T5R6mh the order)
    that make their special case apply.

    Returns:
        Tuple of (basis function, order to use); the order is s unless the
        alias fixes it.
    """
    params = dict(params or {})
    if row_key not in ROW_ALIASES:
        return BasisFunction(parse_row_id(row_key), n=n, params=params, d=d, ell=ell, j=j), s

    row, tag = ROW_ALIASES[row_key]
    if tag in ("1**", "6*"):
        s = 0.5
    elif tag in ("1***", "6**"):
        s = -0.5
    elif tag in ("1*", "A**"):
        if s is None:
            raise ParamError(f"Alias {row_key} sets a = s and needs an order. Pass s")
        params["a"] = s
    if tag in ("A*", "A**"):
        params["b"] = (d + 2 * ell - 2) / 2
    if tag == "A***":
        params["a"] = 0.0
        params.setdefault("b", 0.0)
        n = 0
    return BasisFunction(row, n=n, params=params, d=d, ell=ell, j=j), s


def _note_correction(key: str) -> None:
    if key in CORRECTED_FORMS:
        warnings.warn(
            f"Form {key} is used in corrected form: {CORRECTED_FORMS[key]}", CorrectedFormWarning, stacklevel=3
        )


def _symmetric_mean(formula: RowFormula, f: BasisFunction, s: float, x: EvalPoint, step: float) -> FracResult:
    try:
        above = formula.evaluate(f, s + step, x)
        below = formula.evaluate(f, s - step, x)
    except (PoleError, ZeroDivisionError) as e:
        raise NearPoleError(f"Perturbed evaluation near s = {s} failed: {e}") from e
    return FracResult(
        value=0.5 * (above.value + below.value),
        branch_used=above.branch_used,
        near_pole=True,
        terms_evaluated=above.terms_evaluated + below.terms_evaluated,
    )


def _richardson_across_pole(formula: RowFormula, f: BasisFunction, s: float, x: EvalPoint) -> FracResult:
    """Richardson extrapolation of symmetric means at steps h and h/2.

    The symmetric mean carries an O(h^2) error; combining the two steps as
    (4 M(h/2) - M(h)) / 3 leaves O(h^4).
    """
    warnings.warn(
        f"Row {f.row_id.value} at s = {s} lies within {NEAR_POLE_THRESHOLD} of a pole of its formula; "
        f"Richardson extrapolation from s +/- {NEAR_POLE_STEP} and s +/- {NEAR_POLE_STEP / 2}",
        RuntimeWarning,
        stacklevel=3,
    )
    coarse = _symmetric_mean(formula, f, s, x, NEAR_POLE_STEP)
    fine = _symmetric_mean(formula, f, s, x, NEAR_POLE_STEP / 2)
    value = (4.0 * fine.value - coarse.value) / 3.0
    if not math.isfinite(value):
        raise NearPoleError(f"Perturbed evaluation near s = {s} is not finite: {value}")
    return FracResult(
        value=value,
        branch_used=fine.branch_used,
        near_pole=True,
        terms_evaluated=coarse.terms_evaluated + fine.terms_evaluated,
    )


def frac_apply(f: BasisFunction, s: float, x: EvalPoint, use_special: bool = True) -> FracResult:
    """Evaluate (-Delta)^s f at x; s < 0 gives the Riesz potential of order -s.

    Args:
        f: Catalog function.
        s: Signed order.
        x: Evaluation point of dimension f.d.
        use_special: Route to a special closed form when one applies.

    Returns:
        FracResult with the value, branch and near-pole flag.

    Raises:
        ValidityError: If the parameter-shift theorem rejects (f, s).
        BranchError: At |x| = 1 when the boundary is excluded.
        NearPoleError: If the perturbed evaluation fails as well.
    """
    if x.d != f.d:
        raise ParamError(f"Point dimension {x.d} does not match function dimension {f.d}")
    tag = special_case_table(f, s) if use_special else None
    report = check_validity(catalog_spec(f), s)
    if tag not in LIMIT_TAGS and not report.admissible:
        raise ValidityError(
            f"Row {f.row_id.value} is not admissible at s = {s}: failed {report.failed_conditions}", report
        )

    formula = get_special_formula(tag) if tag else get_row(f.row_id)
    if formula.piecewise and x.r == 1.0 and report.excludes_unit_sphere:
        raise BranchError(f"Row {f.row_id.value} at s = {s} is not defined on |x| = 1. Evaluate off the sphere")
    if tag is not None:
        _note_correction(tag)
        return formula.evaluate(f, s, x)
    if formula.parameter_singular(f):
        formula = MeijerGPathRow(f.row_id)
    else:
        _note_correction(f.row_id.value)
    if formula.singularities(f, s).near_pole():
        return _richardson_across_pole(formula, f, s, x)
    return formula.evaluate(f, s, x)


def riesz_apply(f: BasisFunction, sigma: float, x: EvalPoint) -> FracResult:
    """Riesz potential (-Delta)^(-sigma) f at x, for sigma in (0, d/2)."""
    if sigma <= 0:
        raise ParamError(f"Riesz order must be positive: {sigma}")
    return frac_apply(f, -sigma, x)


def frac_apply_many(
    f: BasisFunction, s: float, points: Sequence[EvalPoint], threads: int = 1
) -> list[FracResult]:
    """frac_apply over many points, in input order."""
    if threads <= 1 or len(points) < 2:
        return [frac_apply(f, s, x) for x in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda x: frac_apply(f, s, x), points))
