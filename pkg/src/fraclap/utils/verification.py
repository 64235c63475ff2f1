"""Verification of the explicit formulas against independent references."""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence

from rich.table import Table

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, parse_row_id
from fraclap.utils.errors import BranchError, DomainError, FracLapError, QuadratureError, ValidityError
from fraclap.utils.explicit_operators import frac_apply, get_special_formula
from fraclap.utils.oracle import OracleConfig, oracle_frac_apply

DEFAULT_ORDERS = (0.25, 0.4, 0.75, -0.2, -0.4)
# Relative errors are taken against max(|reference|, ABS_FLOOR).
ABS_FLOOR = 1e-8
BOUNDARY_BAND = 0.05
BOUNDARY_TOL_FACTOR = 100.0
SPECIAL_STEP = 1e-6
SPECIAL_TOL = 1e-4


class Reference(Enum):
    """Independent value a formula is compared with."""

    ORACLE = "oracle"  # quadrature of the defining integral
    GENERIC = "generic"  # generic formula next to a special order


class CaseStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"  # reference could not reach its tolerance
    SKIPPED = "skipped"  # inadmissible or excluded point


@dataclass(frozen=True)
class RowSample:
    """One catalog function used by the verification matrix."""

    row: RowId
    n: int
    params: Mapping[str, float]
    d: int = 1
    ell: int = 0
    j: int = 0

    def basis(self) -> BasisFunction:
        return BasisFunction(self.row, n=self.n, params=self.params, d=self.d, ell=self.ell, j=self.j)


def _line(row: RowId, *entries: tuple[int, dict]) -> list[RowSample]:
    return [RowSample(row, n, params) for n, params in entries]


def _ball(row: RowId, *entries: tuple[int, dict, int]) -> list[RowSample]:
    return [RowSample(row, n, params, d=2, ell=ell, j=1 if ell else 0) for n, params, ell in entries]


# Degrees up to 4; a, b, alpha in {0, 0.5, 1.25}; lambda = 0.75; nu in {0.5, 1}; mu = 0.5.
ROW_SAMPLES: dict[RowId, list[RowSample]] = {
    RowId.T1R1: _line(RowId.T1R1, (2, {"a": 0.5}), (0, {"a": 0.0}), (4, {"a": 1.25}), (1, {"a": 1.25})),
    RowId.T1R2: _line(RowId.T1R2, (1, {"lam": 0.75}), (3, {"lam": 0.75})),
    RowId.T1R3: _line(RowId.T1R3, (2, {}), (0, {}), (4, {})),
    RowId.T1R4: _line(RowId.T1R4, (3, {}), (1, {})),
    RowId.T1R5: _line(
        RowId.T1R5, (1, {"a": 0.5, "b": 0.0}), (2, {"a": 1.25, "b": 0.5}), (0, {"a": 0.0, "b": 1.25})
    ),
    RowId.T1R6: _line(RowId.T1R6, (2, {}), (0, {}), (3, {}), (4, {})),
    RowId.T1R7: _line(RowId.T1R7, (1, {"alpha": 0.5}), (0, {"alpha": 0.0}), (3, {"alpha": 1.25})),
    RowId.T1R8: _line(RowId.T1R8, (0, {"nu": 0.5}), (0, {"nu": 1.0})),
    RowId.T1R9: _line(RowId.T1R9, (0, {"phase": 0.3, "nu": 0.5}), (0, {"phase": 0.3, "nu": 1.0})),
    RowId.T1R10: _line(RowId.T1R10, (0, {"phase": 0.3, "nu": 0.5}), (0, {"phase": 0.3, "nu": 1.0})),
    RowId.T1R11: _line(RowId.T1R11, (0, {"mu": 0.5, "nu": 0.5}), (0, {"mu": 0.5, "nu": 1.0})),
    RowId.T1R12: _line(RowId.T1R12, (0, {"nu": 0.5}), (0, {"nu": 1.0})),
    RowId.T1R13: _line(RowId.T1R13, (0, {"nu": 0.5}), (0, {"nu": 1.0})),
    RowId.T1R14: _line(RowId.T1R14, (0, {"nu": 0.5}), (0, {"nu": 1.0})),
    RowId.HD_A: _ball(RowId.HD_A, (1, {"a": 0.5, "b": 0.5}, 1), (2, {"a": 1.25, "b": 0.0}, 0), (0, {"a": 0.0, "b": 0.0}, 2)),
    RowId.HD_B: _ball(RowId.HD_B, (1, {"alpha": 0.5}, 1), (2, {"alpha": 1.25}, 0)),
    RowId.HD_C: _ball(RowId.HD_C, (0, {"a": 0.0, "b": 0.5}, 0), (0, {"a": 0.5, "b": 0.0}, 0)),
    RowId.HD_D: _ball(RowId.HD_D, (0, {"a": 0.5, "b": 0.5}, 0), (0, {"a": 1.25, "b": 0.0}, 0)),
}

LINE_POINTS = (0.15, 0.5, 0.85, 1.5, 3.0)
RADIAL_POINTS = LINE_POINTS


@dataclass(frozen=True)
class VerifyCase:
    """One (function, order, point) entry of the verification matrix."""

    sample: RowSample
    s: float
    x: float

    @property
    def reference(self) -> Reference:
        return Reference.ORACLE

    def point(self) -> EvalPoint:
        if self.sample.d == 1:
            return EvalPoint.of(self.x)
        return EvalPoint((self.x,) + (0.0,) * (self.sample.d - 1))


@dataclass
class CaseResult:
    """Outcome of one verification case."""

    case: VerifyCase
    status: CaseStatus
    explicit: Optional[float] = None
    reference_value: Optional[float] = None
    rel_error: Optional[float] = None
    err_est: float = 0.0
    near_pole: bool = False
    message: str = ""

    @property
    def label(self) -> str:
        return self.case.sample.row.value


@dataclass
class SpecialCaseCheck:
    """Closed form at a special order compared with the generic formula beside it."""

    tag: str
    n: int
    s: float
    x: float
    special: float
    generic: float
    rel_diff: float

    @property
    def erratum_candidate(self) -> bool:
        return self.rel_diff > SPECIAL_TOL


def relative_error(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), ABS_FLOOR)


def case_tolerance(case: VerifyCase, tol: float) -> float:
    """tol at interior points, BOUNDARY_TOL_FACTOR * tol within BOUNDARY_BAND of |x| = 1."""
    if case.sample.row not in (RowId.T1R6, RowId.T1R7, RowId.HD_B) and abs(abs(case.x) - 1) < BOUNDARY_BAND:
        return BOUNDARY_TOL_FACTOR * tol
    return tol


def build_matrix(
    rows: Optional[Iterable] = None,
    orders: Sequence[float] = DEFAULT_ORDERS,
    quick: bool = False,
) -> list[VerifyCase]:
    """Cases for the requested rows (all sampled rows by default).

    Quick mode keeps the first sample of each row and the first two points.
    Negative orders (Riesz potentials) are only sampled for one-dimensional rows.
    """
    selected = list(ROW_SAMPLES) if rows is None else [parse_row_id(r) for r in rows]
    cases = []
    for row in selected:
        if row not in ROW_SAMPLES:
            raise ValueError(f"No verification samples for row: {row.value}. Available: {[r.value for r in ROW_SAMPLES]}")
        samples = ROW_SAMPLES[row][:1] if quick else ROW_SAMPLES[row]
        for sample in samples:
            points = LINE_POINTS if sample.d == 1 else RADIAL_POINTS
            if quick:
                points = points[:2]
            for s in orders:
                if s < 0 and sample.d != 1:
                    continue
                cases.extend(VerifyCase(sample, s, x) for x in points)
    return cases


def _reference(case: VerifyCase, cfg: OracleConfig) -> tuple[float, float]:
    return oracle_frac_apply(case.sample.basis(), case.s, case.x, cfg)


def run_case(case: VerifyCase, cfg: OracleConfig, tol: float) -> CaseResult:
    """Evaluate one case; inadmissible (row, s) pairs are skipped."""
    f = case.sample.basis()
    try:
        result = frac_apply(f, case.s, case.point())
    except (ValidityError, BranchError, DomainError) as e:
        return CaseResult(case, CaseStatus.SKIPPED, message=f"{type(e).__name__}: {e}")
    try:
        reference, err_est = _reference(case, cfg)
    except QuadratureError as e:
        return CaseResult(
            case,
            CaseStatus.ERROR,
            explicit=result.value,
            reference_value=e.value,
            err_est=e.err_est or math.inf,
            near_pole=result.near_pole,
            message=f"QuadratureError: {e}",
        )
    except FracLapError as e:
        return CaseResult(case, CaseStatus.ERROR, explicit=result.value, message=f"{type(e).__name__}: {e}")

    err = relative_error(result.value, reference)
    allowed = case_tolerance(case, tol) + err_est / max(abs(reference), ABS_FLOOR)
    status = CaseStatus.PASSED if err <= allowed else CaseStatus.FAILED
    return CaseResult(
        case,
        status,
        explicit=result.value,
        reference_value=reference,
        rel_error=err,
        err_est=err_est,
        near_pole=result.near_pole,
    )


def check_special_case(tag: str, f: BasisFunction, s: float, x: EvalPoint) -> SpecialCaseCheck:
    """Compare a special closed form with the generic formula one step inside the admissible side.

    Warns with RuntimeWarning when the two disagree by more than SPECIAL_TOL,
    which marks the tabulated special case as an erratum candidate.
    """
    special = get_special_formula(tag).evaluate(f, s, x).value
    inward = s - SPECIAL_STEP if s > 0 else s + SPECIAL_STEP
    generic = frac_apply(f, inward, x, use_special=False).value
    check = SpecialCaseCheck(tag, f.n, s, x.coords[0], special, generic, relative_error(generic, special))
    if check.erratum_candidate:
        warnings.warn(
            f"Erratum candidate: special case {tag} (n = {f.n}, s = {s}) differs from the generic formula "
            f"by {check.rel_diff:.3g} at x = {x.coords}",
            RuntimeWarning,
            stacklevel=2,
        )
    return check


SPECIAL_SAMPLES: tuple[tuple[str, RowId, Mapping[str, float], float], ...] = (
    ("1**", RowId.T1R1, {"a": 0.3}, 0.5),
    ("1***", RowId.T1R1, {"a": 0.3}, -0.5),
    ("6*", RowId.T1R6, {}, 0.5),
    ("6**", RowId.T1R6, {}, -0.5),
)
SPECIAL_POINTS = (0.1, 0.45, 0.8, 1.6, 2.5)


def special_case_checks(quick: bool = False) -> list[SpecialCaseCheck]:
    """Checks of the half-integer special cases at degrees 1 and 2."""
    degrees = (1,) if quick else (1, 2)
    points = SPECIAL_POINTS[:2] if quick else SPECIAL_POINTS
    checks = []
    for tag, row, params, s in SPECIAL_SAMPLES:
        for n in degrees:
            f = BasisFunction(row, n=n, params=params)
            checks.extend(check_special_case(tag, f, s, EvalPoint.of(x)) for x in points)
    return checks


@dataclass
class VerificationReport:
    """Accumulates case results and renders the summary table."""

    tol: float
    results: list[CaseResult] = field(default_factory=list)
    special_checks: list[SpecialCaseCheck] = field(default_factory=list)

    def add_result(self, result: CaseResult) -> None:
        self.results.append(result)

    def count(self, status: CaseStatus) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def passed(self) -> bool:
        """True if no case failed or errored and no special case is an erratum candidate."""
        if self.count(CaseStatus.FAILED) or self.count(CaseStatus.ERROR):
            return False
        return not any(c.erratum_candidate for c in self.special_checks)

    def max_error_by_row(self) -> dict[str, float]:
        worst: dict[str, float] = {}
        for r in self.results:
            if r.rel_error is not None:
                worst[r.label] = max(worst.get(r.label, 0.0), r.rel_error)
        return worst

    def format_summary(self) -> str:
        lines = [
            f"Cases: {len(self.results)}",
            f"  Passed: {self.count(CaseStatus.PASSED)}",
            f"  Failed: {self.count(CaseStatus.FAILED)}",
        ]
        if self.count(CaseStatus.ERROR) > 0:
            lines.append(f"  QuadratureError / reference errors: {self.count(CaseStatus.ERROR)}")
        if self.count(CaseStatus.SKIPPED) > 0:
            lines.append(f"  Skipped (inadmissible): {self.count(CaseStatus.SKIPPED)}")
        candidates = sum(1 for c in self.special_checks if c.erratum_candidate)
        if candidates:
            lines.append(f"  Erratum candidates: {candidates}")
        return "\n".join(lines)

    def create_table(self) -> Table:
        """Create a Rich table of maximum relative errors per row."""
        table = Table(title="Explicit formulas against independent references")
        table.add_column("Row", style="cyan")
        table.add_column("Reference")
        table.add_column("Cases", justify="right")
        table.add_column("Max rel. error", justify="right")
        table.add_column("Failed", justify="right")
        table.add_column("Errors", justify="right")

        labels = list(dict.fromkeys(r.label for r in self.results))
        worst = self.max_error_by_row()
        for label in labels:
            rows = [r for r in self.results if r.label == label]
            failed = sum(1 for r in rows if r.status == CaseStatus.FAILED)
            errors = sum(1 for r in rows if r.status == CaseStatus.ERROR)
            error = worst.get(label)

            # Color-code against the tolerance
            if failed or errors:
                style = "bold red"
            elif error is not None and error > 0.1 * self.tol:
                style = "yellow"
            else:
                style = "green"

            table.add_row(
                label,
                rows[0].case.reference.value,
                f"{len(rows)}",
                f"[{style}]{error:.2e}[/{style}]" if error is not None else "[dim]n/a[/dim]",
                f"{failed}",
                f"{errors}",
            )

        for tag in dict.fromkeys(c.tag for c in self.special_checks):
            checks = [c for c in self.special_checks if c.tag == tag]
            diff = max(c.rel_diff for c in checks)
            style = "bold red" if diff > SPECIAL_TOL else "green"
            candidates = sum(1 for c in checks if c.erratum_candidate)
            table.add_row(tag, Reference.GENERIC.value, f"{len(checks)}", f"[{style}]{diff:.2e}[/{style}]", f"{candidates}", "0")

        return table


def run_verification(
    rows: Optional[Iterable] = None,
    orders: Sequence[float] = DEFAULT_ORDERS,
    tol: float = 1e-6,
    quick: bool = False,
    threads: int = 1,
    cfg: Optional[OracleConfig] = None,
    include_special: bool = True,
) -> VerificationReport:
    """Run the verification matrix.

    Args:
        rows: Row ids to check (all sampled rows if None).
        orders: Orders s; negative values check Riesz potentials in 1D.
        tol: Relative tolerance at interior points.
        quick: Reduced matrix and oracle budget.
        threads: Cases evaluated in parallel.
        cfg: Oracle budget; OracleConfig.quick() in quick mode by default.
        include_special: Also compare the half-integer special cases.

    Returns:
        VerificationReport with results in matrix order.
    """
    if cfg is None:
        cfg = OracleConfig.quick() if quick else OracleConfig()
    cases = build_matrix(rows, orders, quick)
    report = VerificationReport(tol=tol)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: run_case(c, cfg, tol), cases))
    else:
        results = [run_case(c, cfg, tol) for c in cases]
    for result in results:
        report.add_result(result)
    if include_special:
        report.special_checks = special_case_checks(quick)
    return report
