"""Tests for the verification matrix and its report."""

import warnings

import pytest

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId
from fraclap.utils.oracle import OracleConfig
from fraclap.utils.verification import (
    ABS_FLOOR,
    BOUNDARY_TOL_FACTOR,
    DEFAULT_ORDERS,
    LINE_POINTS,
    ROW_SAMPLES,
    CaseResult,
    CaseStatus,
    Reference,
    RowSample,
    SpecialCaseCheck,
    VerificationReport,
    VerifyCase,
    build_matrix,
    case_tolerance,
    check_special_case,
    relative_error,
    run_case,
    run_verification,
    special_case_checks,
)


def _case(row: RowId = RowId.T1R6, s: float = 0.25, x: float = 0.2) -> VerifyCase:
    return VerifyCase(ROW_SAMPLES[row][0], s, x)


class TestMatrix:
    """Tests for building the verification matrix."""

    def test_quick_matrix(self):
        """Test that quick mode keeps one sample and two points per order."""
        cases = build_matrix(["T1R1"], (0.25, 0.5), quick=True)
        assert len(cases) == 4
        assert {c.sample.n for c in cases} == {2}

    def test_full_matrix_uses_every_sample(self):
        """Test that the full matrix covers every sample of the row."""
        cases = build_matrix(["T1R1"], (0.25,))
        assert len(cases) == len(ROW_SAMPLES[RowId.T1R1]) * len(LINE_POINTS)

    def test_riesz_orders_only_in_one_dimension(self):
        """Test that negative orders are dropped for higher-dimensional rows."""
        cases = build_matrix(["HD_A"], (0.25, -0.2))
        assert all(c.s > 0 for c in cases)
        assert len(build_matrix(["T1R6"], (0.25, -0.2))) == 2 * len(ROW_SAMPLES[RowId.T1R6]) * len(LINE_POINTS)

    def test_default_orders(self):
        """Test that the default run covers three Laplacian and two Riesz orders."""
        assert DEFAULT_ORDERS == (0.25, 0.4, 0.75, -0.2, -0.4)

    def test_every_row_is_sampled(self):
        """Test that all catalog rows, the ball complement included, have samples."""
        assert set(ROW_SAMPLES) == set(RowId)

    def test_sample_parameters(self):
        """Test the sampled parameter values and degrees."""
        samples = [s for row in ROW_SAMPLES.values() for s in row]
        assert max(s.n for s in samples) == 4
        values = {key: set() for key in ("a", "b", "alpha", "lam", "nu", "mu")}
        for sample in samples:
            for key, value in sample.params.items():
                if key in values:
                    values[key].add(value)
        assert values["a"] == {0.0, 0.5, 1.25}
        assert values["b"] == {0.0, 0.5, 1.25}
        assert values["alpha"] == {0.0, 0.5, 1.25}
        assert values["lam"] == {0.75}
        assert values["nu"] == {0.5, 1.0}
        assert values["mu"] == {0.5}
        assert LINE_POINTS == (0.15, 0.5, 0.85, 1.5, 3.0)

    def test_unknown_row(self):
        """Test that an unknown row id raises ValueError."""
        with pytest.raises(ValueError, match="Available"):
            build_matrix(["T1R99"])

    def test_reference_choice(self):
        """Test that every row, the Bessel rows included, uses the quadrature oracle."""
        assert _case(RowId.T1R8).reference == Reference.ORACLE
        assert _case(RowId.T1R13).reference == Reference.ORACLE
        assert _case(RowId.T1R6).reference == Reference.ORACLE

    def test_case_point(self):
        """Test that radial samples are evaluated on the first axis."""
        case = _case(RowId.HD_B, x=0.6)
        assert case.point().coords == (0.6, 0.0)


class TestTolerances:
    """Tests for relative errors and the boundary band."""

    def test_relative_error_floor(self):
        """Test that tiny references are compared against ABS_FLOOR."""
        assert relative_error(2.0, 1.0) == 1.0
        assert relative_error(1e-9, 0.0) == pytest.approx(1e-9 / ABS_FLOOR)

    def test_boundary_band(self):
        """Test the relaxed tolerance near |x| = 1 for compactly supported rows."""
        assert case_tolerance(_case(RowId.T1R1, x=1.02), 1e-6) == pytest.approx(BOUNDARY_TOL_FACTOR * 1e-6)
        assert case_tolerance(_case(RowId.T1R1, x=0.6), 1e-6) == 1e-6
        assert case_tolerance(_case(RowId.T1R6, x=1.02), 1e-6) == 1e-6


class TestRunCase:
    """Tests for single verification cases."""

    def test_inadmissible_is_skipped(self):
        """Test that a Riesz order at d/2 is skipped rather than failed."""
        result = run_case(_case(RowId.T1R6, s=-0.6), OracleConfig.quick(), 1e-6)
        assert result.status == CaseStatus.SKIPPED
        assert "ValidityError" in result.message

    @pytest.mark.parametrize("row", [RowId.T1R8, RowId.T1R9, RowId.T1R11, RowId.T1R13])
    def test_bessel_row_against_oracle(self, row):
        """Test Bessel rows against the oracle with the fitted far-field tail."""
        result = run_case(_case(row, s=0.4, x=0.5), OracleConfig.quick(), 1e-6)
        assert result.status == CaseStatus.PASSED, result.message
        assert result.err_est > 0.0

    @pytest.mark.slow
    def test_oracle_reference(self, quick_oracle):
        """Test the Hermite row against the quadrature oracle."""
        result = run_case(_case(RowId.T1R6, s=0.5, x=0.6), quick_oracle, 1e-6)
        assert result.status == CaseStatus.PASSED
        assert result.rel_error is not None

    @pytest.mark.slow
    @pytest.mark.parametrize("x", [0.15, 0.5, 0.85])
    def test_high_order_near_window(self, x):
        """Test that s = 0.75 meets the default oracle tolerance on the Jacobi row."""
        result = run_case(_case(RowId.T1R1, s=0.75, x=x), OracleConfig(), 1e-8)
        assert result.status == CaseStatus.PASSED, result.message
        assert result.err_est <= 1e-8 * max(1.0, abs(result.reference_value))

    @pytest.mark.slow
    @pytest.mark.parametrize("s", [0.25, 0.75])
    @pytest.mark.parametrize("x", [0.5, 1.5, 3.0])
    def test_ball_complement_against_oracle(self, s, x, quick_oracle):
        """Test the complement indicator of row C against the oracle inside and outside the ball."""
        result = run_case(VerifyCase(ROW_SAMPLES[RowId.HD_C][0], s, x), quick_oracle, 1e-6)
        assert result.status == CaseStatus.PASSED, result.message

    @pytest.mark.slow
    @pytest.mark.parametrize("x", [0.5, 1.5, 3.0])
    def test_growing_ball_complement(self, x, quick_oracle):
        """Test that row C with a = 1/2, growing like |x|, never disagrees with the oracle at s = 0.75."""
        result = run_case(VerifyCase(ROW_SAMPLES[RowId.HD_C][1], 0.75, x), quick_oracle, 1e-6)
        assert result.status in (CaseStatus.PASSED, CaseStatus.SKIPPED), result.message


class TestSpecialCases:
    """Tests for the special-order comparisons."""

    def test_corrected_forms_agree(self):
        """Test that the half-integer closed forms match the generic formula beside them."""
        with warnings.catch_warnings():
            warnings.simplefilter("error", RuntimeWarning)
            checks = special_case_checks(quick=True)
        assert len(checks) == 8
        assert not any(c.erratum_candidate for c in checks)

    def test_mismatch_is_flagged(self):
        """Test that a closed form for the wrong row is reported as an erratum candidate."""
        f = BasisFunction(RowId.T1R1, n=1, params={"a": 0.3})
        with pytest.warns(RuntimeWarning, match="Erratum candidate"):
            check = check_special_case("6*", f, 0.5, EvalPoint.of(0.45))
        assert check.erratum_candidate


class TestVerificationReport:
    """Tests for VerificationReport."""

    def _result(self, status: CaseStatus, rel_error=None) -> CaseResult:
        return CaseResult(_case(), status, explicit=1.0, reference_value=1.0, rel_error=rel_error)

    def test_passed(self):
        """Test that passed and skipped cases give an overall pass."""
        report = VerificationReport(tol=1e-6)
        report.add_result(self._result(CaseStatus.PASSED, 1e-9))
        report.add_result(self._result(CaseStatus.SKIPPED))
        assert report.passed
        assert "Skipped (inadmissible): 1" in report.format_summary()

    @pytest.mark.parametrize("status", [CaseStatus.FAILED, CaseStatus.ERROR])
    def test_failures(self, status):
        """Test that a failed or erroring case fails the report."""
        report = VerificationReport(tol=1e-6)
        report.add_result(self._result(CaseStatus.PASSED, 1e-9))
        report.add_result(self._result(status, 1e-3))
        assert not report.passed

    def test_erratum_candidate_fails(self):
        """Test that an erratum candidate fails the report."""
        report = VerificationReport(tol=1e-6)
        report.special_checks.append(SpecialCaseCheck("1**", 1, 0.5, 0.1, 1.0, 2.0, 0.5))
        assert not report.passed
        assert "Erratum candidates: 1" in report.format_summary()

    def test_table_rows(self):
        """Test one table row per catalog row and per special tag."""
        report = VerificationReport(tol=1e-6)
        report.add_result(self._result(CaseStatus.PASSED, 1e-9))
        report.add_result(CaseResult(_case(RowId.T1R8), CaseStatus.PASSED, rel_error=1e-12))
        report.special_checks.append(SpecialCaseCheck("6*", 1, 0.5, 0.1, 1.0, 1.0, 0.0))
        assert report.create_table().row_count == 3
        assert report.max_error_by_row() == {"T1R6": 1e-9, "T1R8": 1e-12}


class TestRunVerification:
    """Tests for run_verification."""

    def test_bessel_rows(self):
        """Test a quick run over a Bessel row against the oracle."""
        report = run_verification(rows=["T1R8"], orders=(0.25,), quick=True, include_special=False)
        assert len(report.results) == 2
        assert report.passed

    def test_threads_preserve_order(self):
        """Test that threaded runs return results in matrix order."""
        serial = run_verification(rows=["T1R8"], orders=(0.25, 0.5), quick=True, include_special=False)
        threaded = run_verification(rows=["T1R8"], orders=(0.25, 0.5), quick=True, threads=2, include_special=False)
        assert [r.case for r in threaded.results] == [r.case for r in serial.results]

    @pytest.mark.slow
    def test_oracle_rows(self):
        """Test a quick run over oracle referenced rows."""
        report = run_verification(rows=["T1R6", "T1R7"], orders=(0.25,), quick=True, include_special=False)
        assert report.count(CaseStatus.PASSED) == len(report.results)

    def test_row_sample_basis(self):
        """Test that RowSample builds the matching basis function."""
        sample = RowSample(RowId.HD_A, 1, {"a": 0.5, "b": 0.5}, d=2, ell=1, j=1)
        f = sample.basis()
        assert (f.row_id, f.n, f.d, f.ell, f.j) == (RowId.HD_A, 1, 2, 1, 1)
