"""Tests for the catalog of classical basis functions."""

import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st

from fraclap.utils.classical_bases import (
    BESSEL_SERIES_MAX,
    ROW_DESCRIPTIONS,
    ROW_PARAMETERS,
    BasisFunction,
    EvalPoint,
    RowId,
    basis_eval,
    besselJ_eval,
    besselY_eval,
    chebyshevT_eval,
    chebyshevU_eval,
    gegenbauer_eval,
    hermite_eval,
    jacobi_at_one,
    jacobi_connection,
    jacobi_eval,
    laguerre_eval,
    orthogonality_matrix,
    parse_row_id,
    profile_power,
    radial_part,
    solid_harmonic,
)
from fraclap.utils.errors import DomainError, ParamError


class TestRowIds:
    """Tests for row identifiers and their metadata."""

    def test_every_row_described(self):
        """Test that each row has parameters and a description."""
        assert set(ROW_PARAMETERS) == set(RowId)
        assert set(ROW_DESCRIPTIONS) == set(RowId)
        assert len(RowId) == 18

    def test_parse_row_id(self):
        """Test lookup by stable string."""
        assert parse_row_id("T1R7") == RowId.T1R7
        assert parse_row_id(RowId.HD_B) == RowId.HD_B

    def test_parse_unknown(self):
        """Test that unknown ids list the available rows."""
        with pytest.raises(ValueError, match="Available"):
            parse_row_id("T9R9")

    def test_higher_dimensional_flag(self):
        """Test the HD_ prefix flag."""
        assert RowId.HD_A.is_higher_dimensional
        assert not RowId.T1R14.is_higher_dimensional


class TestBasisFunction:
    """Tests for BasisFunction validation."""

    def test_params_coerced_to_float(self):
        """Test that integer parameters become floats."""
        f = BasisFunction(RowId.T1R1, n=2, params={"a": 1})
        assert isinstance(f.get("a"), float)

    def test_missing_parameter(self):
        """Test that a missing parameter names the required ones."""
        with pytest.raises(ParamError, match="Required"):
            BasisFunction(RowId.T1R5, n=1, params={"a": 0.5})

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"row_id": RowId.T1R1, "n": -1, "params": {"a": 0.5}},
            {"row_id": RowId.T1R1, "params": {"a": -1.0}},
            {"row_id": RowId.T1R2, "params": {"lam": -0.5}},
            {"row_id": RowId.T1R6, "d": 2},
            {"row_id": RowId.HD_A, "params": {"a": 0.5, "b": 0.0}, "d": 2, "ell": 0, "j": 1},
            {"row_id": RowId.HD_A, "params": {"a": 0.5, "b": 0.0}, "d": 1, "ell": 2},
            {"row_id": RowId.T1R11, "params": {"mu": -0.5, "nu": -0.5}},
        ],
    )
    def test_invalid(self, kwargs):
        """Test parameter range checks."""
        with pytest.raises(ParamError):
            BasisFunction(**kwargs)

    def test_parity(self):
        """Test the parity bit of the degree."""
        assert BasisFunction(RowId.T1R6, n=5).parity == 1
        assert BasisFunction(RowId.T1R6, n=4).parity == 0


class TestEvalPoint:
    """Tests for evaluation points."""

    def test_radius(self):
        """Test d and r."""
        p = EvalPoint.of(3.0, 4.0)
        assert p.d == 2
        assert p.r == 5.0

    def test_non_finite(self):
        """Test that non-finite coordinates raise DomainError."""
        with pytest.raises(DomainError):
            EvalPoint.of(math.nan)
        with pytest.raises(DomainError):
            EvalPoint(())


class TestPolynomials:
    """Tests for the classical polynomial evaluators."""

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
    def test_jacobi_matches_scipy(self, n):
        """Test the recurrence against scipy, including |x| > 1."""
        x = np.array([-1.5, -0.7, 0.0, 0.3, 1.0, 2.0])
        np.testing.assert_allclose(jacobi_eval(n, 0.4, -0.3, x), sc.eval_jacobi(n, 0.4, -0.3, x), rtol=1e-12, atol=1e-13)

    def test_jacobi_scalar_returns_float(self):
        """Test that a scalar argument gives a Python float."""
        assert isinstance(jacobi_eval(3, 0.5, 0.5, 0.2), float)

    def test_jacobi_at_one(self):
        """Test P_n^(a,b)(1) = (a+1)_n / n!."""
        assert jacobi_eval(4, 0.7, 1.3, 1.0) == pytest.approx(jacobi_at_one(4, 0.7), rel=1e-13)

    def test_gegenbauer_and_chebyshev(self):
        """Test Gegenbauer and Chebyshev renormalizations."""
        x = np.linspace(-0.9, 0.9, 7)
        np.testing.assert_allclose(gegenbauer_eval(4, 1.5, x), sc.eval_gegenbauer(4, 1.5, x), rtol=1e-12, atol=1e-13)
        np.testing.assert_allclose(chebyshevT_eval(5, x), np.cos(5 * np.arccos(x)), atol=1e-13)
        np.testing.assert_allclose(chebyshevU_eval(3, x), sc.eval_chebyu(3, x), atol=1e-13)

    def test_laguerre_and_hermite(self):
        """Test Laguerre and Hermite against scipy."""
        x = np.array([0.0, 0.5, 2.0, 7.0])
        np.testing.assert_allclose(laguerre_eval(6, 0.5, x), sc.eval_genlaguerre(6, 0.5, x), rtol=1e-10, atol=1e-10)
        np.testing.assert_allclose(hermite_eval(7, x), sc.eval_hermite(7, x), rtol=1e-12, atol=1e-12)

    def test_invalid_degree(self):
        """Test that a negative degree raises ParamError."""
        with pytest.raises(ParamError):
            hermite_eval(-1, 0.0)
        with pytest.raises(ParamError):
            jacobi_eval(2, -1.0, 0.0, 0.0)

    @given(st.integers(min_value=0, max_value=6), st.floats(min_value=-0.9, max_value=2.0))
    @settings(max_examples=30)
    def test_jacobi_connection_reconstructs(self, n, alpha):
        """Test that connection coefficients rebuild P_n^(a,b) in another Jacobi basis."""
        a, b, beta = 0.3, -0.2, 0.6
        coeffs = jacobi_connection(n, a, b, alpha, beta)
        x = np.linspace(-1, 1, 9)
        rebuilt = sum(c * jacobi_eval(k, alpha, beta, x) for k, c in enumerate(coeffs))
        np.testing.assert_allclose(rebuilt, jacobi_eval(n, a, b, x), atol=1e-9)

    @given(
        st.floats(min_value=-0.9, max_value=2.5),
        st.floats(min_value=-0.9, max_value=2.5),
        st.floats(min_value=-0.9, max_value=2.5),
        st.floats(min_value=-0.9, max_value=2.5),
    )
    @settings(max_examples=30)
    def test_jacobi_connection_round_trip(self, a, b, alpha, beta):
        """Test that (a, b) -> (alpha, beta) -> (a, b) composes to the identity."""
        degree = 5
        forward = np.zeros((degree + 1, degree + 1))
        backward = np.zeros((degree + 1, degree + 1))
        for n in range(degree + 1):
            forward[n, : n + 1] = jacobi_connection(n, a, b, alpha, beta)
            backward[n, : n + 1] = jacobi_connection(n, alpha, beta, a, b)
        np.testing.assert_allclose(forward @ backward, np.eye(degree + 1), atol=1e-9)


class TestOrthogonality:
    """Tests for Gram matrices of the 1D families."""

    @pytest.mark.parametrize(
        "family,params",
        [
            ("jacobi", {"a": 0.5, "b": -0.3}),
            ("gegenbauer", {"lam": 1.25}),
            ("chebyshevT", {}),
            ("chebyshevU", {}),
            ("hermite", {}),
            ("laguerre", {"alpha": 2.0}),
        ],
    )
    def test_gram_matrix_diagonal(self, family, params):
        """Test that off-diagonal inner products vanish relative to the diagonal."""
        gram = orthogonality_matrix(family, 5, params, nodes=200)
        scale = np.sqrt(np.outer(np.diag(gram), np.diag(gram)))
        off = gram / scale - np.eye(6)
        assert np.max(np.abs(off)) < 1e-10

    def test_hermite_norm(self):
        """Test the Hermite norm sqrt(pi) 2^n n!."""
        gram = orthogonality_matrix("hermite", 3, nodes=300)
        assert gram[3, 3] == pytest.approx(math.sqrt(math.pi) * 8 * 6, rel=1e-10)

    def test_unknown_family(self):
        """Test that an unknown family raises ParamError."""
        with pytest.raises(ParamError):
            orthogonality_matrix("legendre2", 2)


class TestBessel:
    """Tests for Bessel evaluators."""

    @pytest.mark.parametrize("nu,x", [(0.0, 1.3), (1.5, 0.4), (-0.3, 2.0), (2.0, 9.5), (0.7, 25.0)])
    def test_besselJ(self, nu, x):
        """Test J_nu against scipy on both sides of the series cutoff."""
        assert besselJ_eval(nu, x) == pytest.approx(sc.jv(nu, x), rel=1e-9, abs=1e-12)

    def test_besselJ_negative_integer_order(self):
        """Test J_{-k} = (-1)^k J_k."""
        assert besselJ_eval(-3.0, 1.7) == pytest.approx(-sc.jv(3, 1.7), rel=1e-12)

    def test_besselJ_domain(self):
        """Test the origin and negative arguments."""
        assert besselJ_eval(0.0, 0.0) == 1.0
        assert besselJ_eval(1.5, 0.0) == 0.0
        assert besselJ_eval(1.0, -0.5) == pytest.approx(-sc.jv(1, 0.5), rel=1e-13)
        with pytest.raises(DomainError):
            besselJ_eval(0.5, -1.0)
        with pytest.raises(DomainError):
            besselJ_eval(-0.5, 0.0)

    @pytest.mark.parametrize("nu,x", [(0.3, 1.1), (1.5, 3.0), (0.0, 0.8), (1.0, 2.5), (2.00005, 1.4), (0.5, 14.0)])
    def test_besselY(self, nu, x):
        """Test Y_nu against scipy, including integer and near-integer orders."""
        assert besselY_eval(nu, x) == pytest.approx(sc.yv(nu, x), rel=1e-6)

    def test_besselY_domain(self):
        """Test that x <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            besselY_eval(0.5, 0.0)

    @given(
        st.floats(min_value=0.0, max_value=3.0).filter(lambda nu: abs(nu - round(nu)) > 1e-3),
        st.floats(min_value=0.5, max_value=10.0),
    )
    @settings(max_examples=60)
    def test_wronskian(self, nu, x):
        """Test J_(nu+1) Y_nu - J_nu Y_(nu+1) = 2 / (pi x)."""
        w = besselJ_eval(nu + 1, x) * besselY_eval(nu, x) - besselJ_eval(nu, x) * besselY_eval(nu + 1, x)
        assert w == pytest.approx(2 / (math.pi * x), rel=1e-8)

    @pytest.mark.parametrize("nu", [0.0, 1.0, 2.0])
    @pytest.mark.parametrize("x", [0.5, 3.7, 9.2])
    def test_wronskian_integer_order(self, nu, x):
        """Test the Wronskian where Y takes the integer-order limit."""
        w = besselJ_eval(nu + 1, x) * besselY_eval(nu, x) - besselJ_eval(nu, x) * besselY_eval(nu + 1, x)
        assert w == pytest.approx(2 / (math.pi * x), rel=1e-8)

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 1.25, 2.5])
    def test_continuous_at_series_cutoff(self, nu):
        """Test that the series and scipy.special agree where the evaluators switch."""
        eps = 1e-9
        below, above = BESSEL_SERIES_MAX - eps, BESSEL_SERIES_MAX + eps
        assert besselJ_eval(nu, below) == pytest.approx(besselJ_eval(nu, above), rel=1e-9, abs=1e-11)
        assert besselY_eval(nu, below) == pytest.approx(besselY_eval(nu, above), rel=1e-8, abs=1e-8)
        assert besselJ_eval(nu, below) == pytest.approx(sc.jv(nu, below), rel=1e-9, abs=1e-12)


class TestHarmonicsAndEvaluation:
    """Tests for solid harmonics and basis_eval."""

    def test_solid_harmonic_2d(self):
        """Test r^l sin(l theta) for j = 0 and r^l cos(l theta) for j = 1."""
        x, y = 0.6, 0.8
        theta = math.atan2(y, x)
        assert solid_harmonic((x, y), 3, 0) == pytest.approx(math.sin(3 * theta), abs=1e-14)
        assert solid_harmonic((x, y), 3, 1) == pytest.approx(math.cos(3 * theta), abs=1e-14)
        assert solid_harmonic((x, y), 0, 0) == 1.0

    def test_solid_harmonic_3d_zonal(self):
        """Test the zonal harmonic |x|^l C_l^(1/2)(x1/|x|) = |x|^l P_l."""
        coords = (0.3, 0.4, 1.2)
        r = math.sqrt(sum(c * c for c in coords))
        expected = r**2 * sc.eval_legendre(2, coords[0] / r)
        assert solid_harmonic(coords, 2) == pytest.approx(expected, rel=1e-13)

    def test_profile_power(self):
        """Test (z)_+^p for positive and non-positive z."""
        np.testing.assert_allclose(profile_power(np.array([-1.0, 0.0, 4.0]), 0.5), [0.0, 0.0, 2.0])
        assert profile_power(0.0, -0.5) == 0.0

    def test_weighted_jacobi(self):
        """Test T1R1 inside and outside the interval."""
        f = BasisFunction(RowId.T1R1, n=2, params={"a": 0.5})
        x = 0.3
        expected = (1 - x * x) ** 0.5 * sc.eval_jacobi(2, 0.5, 0.5, x)
        assert basis_eval(f, EvalPoint.of(x)) == pytest.approx(expected, rel=1e-13)
        assert basis_eval(f, EvalPoint.of(1.5)) == 0.0

    def test_hermite_function(self):
        """Test T1R6 exp(-x^2) H_n(x)."""
        f = BasisFunction(RowId.T1R6, n=3)
        assert basis_eval(f, EvalPoint.of(0.7)) == pytest.approx(math.exp(-0.49) * sc.eval_hermite(3, 0.7))

    def test_bessel_rows_even(self):
        """Test that the Bessel rows depend on |x|."""
        f = BasisFunction(RowId.T1R13, params={"nu": 0.25})
        assert basis_eval(f, EvalPoint.of(-1.2)) == pytest.approx(basis_eval(f, EvalPoint.of(1.2)))

    def test_radial_jacobi_singular_origin(self):
        """Test that T1R5 with b < 0 is undefined at 0."""
        f = BasisFunction(RowId.T1R5, n=1, params={"a": 0.5, "b": -0.5})
        with pytest.raises(DomainError):
            basis_eval(f, EvalPoint.of(0.0))

    def test_ball_jacobi_2d(self):
        """Test HD_A as harmonic times radial factor."""
        f = BasisFunction(RowId.HD_A, n=1, params={"a": 0.5, "b": 1.0}, d=2, ell=1, j=1)
        x, y = 0.3, 0.2
        rr = x * x + y * y
        expected = x * (1 - rr) ** 0.5 * sc.eval_jacobi(1, 0.5, 1.0, 2 * rr - 1)
        assert basis_eval(f, EvalPoint.of(x, y)) == pytest.approx(expected, rel=1e-13)
        assert radial_part(f, math.sqrt(rr)) == pytest.approx(expected / x, rel=1e-13)

    def test_radial_part_rejects_line_rows(self):
        """Test that 1D rows have no radial factorization."""
        with pytest.raises(ParamError):
            radial_part(BasisFunction(RowId.T1R6), 0.5)

    def test_dimension_mismatch(self):
        """Test that a point of the wrong dimension raises ParamError."""
        f = BasisFunction(RowId.HD_B, params={"alpha": 0.0}, d=3)
        with pytest.raises(ParamError):
            basis_eval(f, EvalPoint.of(0.1, 0.2))
