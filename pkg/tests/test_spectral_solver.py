"""Tests for the Zernike disk solver and the interval solver."""

import math

import numpy as np
import pytest
import scipy.special as sc

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, jacobi_eval
from fraclap.utils.errors import ParamError, ZernikeIndexError
from fraclap.utils.explicit_operators import riesz_apply
from fraclap.utils.oracle import OracleConfig
from fraclap.utils.spectral_solver import (
    DiskExpansion,
    DiskSolution,
    ZernikeIndex,
    ball_riesz_radial,
    cubic_gaussian_rhs,
    disk_analyze,
    disk_residual,
    interior_sample_points,
    solve_fractional_disk,
    solve_fractional_interval,
    zernike_eval,
    zernike_indices,
)


class TestZernikeIndex:
    """Tests for ZernikeIndex validation and enumeration."""

    @pytest.mark.parametrize("n,ell,j", [(-1, 0, 0), (2, 3, 0), (3, 2, 0), (2, 0, 1), (2, 2, 2)])
    def test_invalid(self, n, ell, j):
        """Test that out-of-range or wrong-parity indices raise ZernikeIndexError."""
        with pytest.raises(ZernikeIndexError):
            ZernikeIndex(n, ell, j)

    def test_radial_degree(self):
        """Test k = (n - ell) / 2."""
        assert ZernikeIndex(5, 1, 0).radial_degree == 2

    @pytest.mark.parametrize("N", [0, 1, 4, 7])
    def test_index_count(self, N):
        """Test that there are (N+1)(N+2)/2 indices up to degree N."""
        indices = zernike_indices(N)
        assert len(indices) == (N + 1) * (N + 2) // 2
        assert len(set(indices)) == len(indices)

    def test_zernike_eval(self):
        """Test Z^(b)_{4,2,0} against scipy's Jacobi polynomial."""
        b, x, y = -0.3, 0.3, 0.4
        rr = x * x + y * y
        expected = 2 * x * y * sc.eval_jacobi(1, b, 2, 2 * rr - 1)
        assert zernike_eval(ZernikeIndex(4, 2, 0), b, x, y) == pytest.approx(expected, rel=1e-13)


class TestDiskExpansion:
    """Tests for disk analysis and expansion records."""

    def test_single_coefficient_recovered(self):
        """Test that analyzing one weighted Zernike polynomial returns that coefficient alone."""
        idx = ZernikeIndex(3, 1, 1)
        f = DiskExpansion(b_param=-0.3, N=3, coeffs={idx: 1.0}).synthesize
        expansion = disk_analyze(f, -0.3, 5)
        for other, c in expansion.coeffs.items():
            assert c == pytest.approx(1.0 if other == idx else 0.0, abs=1e-11)

    def test_threads_match_serial(self):
        """Test that threaded analysis gives the same coefficients."""
        serial = disk_analyze(cubic_gaussian_rhs, -1 / 3, 6)
        threaded = disk_analyze(cubic_gaussian_rhs, -1 / 3, 6, threads=3)
        assert threaded.coeffs == serial.coeffs

    def test_cubic_gaussian_modes(self):
        """Test that x^3 exp(-r^2) only excites the cosine modes ell = 1 and 3."""
        expansion = disk_analyze(cubic_gaussian_rhs, -1 / 3, 8)
        largest = max(abs(c) for c in expansion.coeffs.values())
        active = {(idx.ell, idx.j) for idx, c in expansion.coeffs.items() if abs(c) > 1e-10 * largest}
        assert active == {(1, 1), (3, 1)}

    def test_synthesis_reproduces_rhs(self):
        """Test that the truncated expansion reproduces a polynomial right-hand side exactly."""
        b = -0.25
        f = DiskExpansion(b, 4, {ZernikeIndex(2, 0, 0): 2.0, ZernikeIndex(3, 1, 0): -0.5}).synthesize
        expansion = disk_analyze(f, b, 4)
        assert expansion.synthesize(0.2, -0.5) == pytest.approx(f(0.2, -0.5), rel=1e-11)
        assert expansion.synthesize(1.5, 0.0) == 0.0

    def test_json_round_trip(self):
        """Test to_json and from_json on a non-trivial expansion."""
        expansion = disk_analyze(cubic_gaussian_rhs, -1 / 3, 4)
        assert DiskExpansion.from_json(expansion.to_json()) == expansion

    def test_json_errors(self):
        """Test unsupported schema and missing keys."""
        payload = DiskExpansion(-0.3, 2, {ZernikeIndex(0, 0, 0): 1.0}).to_dict()
        with pytest.raises(ParamError, match="schema"):
            DiskExpansion.from_dict({**payload, "schema": 7})
        del payload["b"]
        with pytest.raises(ParamError, match="missing"):
            DiskExpansion.from_dict(payload)

    def test_index_beyond_truncation(self):
        """Test that coefficients above degree N are rejected."""
        with pytest.raises(ZernikeIndexError):
            DiskExpansion(-0.3, 1, {ZernikeIndex(2, 0, 0): 1.0})

    def test_invalid_analysis(self):
        """Test N < 0 and b <= -1."""
        with pytest.raises(ParamError):
            disk_analyze(cubic_gaussian_rhs, -0.3, -1)
        with pytest.raises(ParamError):
            disk_analyze(cubic_gaussian_rhs, -1.0, 3)


class TestBallRiesz:
    """Tests for the vectorized Riesz potential of the weighted Zernike basis."""

    @pytest.mark.parametrize("k,ell", [(0, 0), (1, 1), (2, 3)])
    @pytest.mark.parametrize("point", [(0.4, 0.3), (1.2, 1.0)])
    def test_matches_riesz_apply(self, k, ell, point):
        """Test against riesz_apply of the HD_A catalog function with a = -sigma, b = ell."""
        sigma = 0.3
        f = BasisFunction(RowId.HD_A, n=k, params={"a": -sigma, "b": float(ell)}, d=2, ell=ell, j=1 if ell else 0)
        x, y = point
        harmonic = (complex(x, y) ** ell).real if ell else 1.0
        expected = riesz_apply(f, sigma, EvalPoint.of(x, y)).value
        assert harmonic * ball_riesz_radial(k, ell, sigma, math.hypot(x, y)) == pytest.approx(expected, rel=1e-10)

    def test_vectorized(self):
        """Test that arrays straddling r = 1 evaluate elementwise."""
        r = np.array([0.0, 0.5, 1.0, 1.5, 3.0])
        values = ball_riesz_radial(1, 2, 0.25, r)
        assert values.shape == r.shape
        assert values[3] == pytest.approx(ball_riesz_radial(1, 2, 0.25, 1.5), rel=1e-15)

    def test_inside_is_polynomial(self):
        """Test the inside closed form: a multiple of P_k^(-sigma, ell)(2r^2 - 1)."""
        sigma, k, ell = 0.2, 2, 1
        scale = 4**-sigma * sc.gamma(k + 1 - sigma) / math.factorial(k) * sc.gamma(2 + k - sigma) / sc.gamma(2 + k)
        for r in (0.1, 0.6, 0.95):
            expected = scale * sc.eval_jacobi(k, -sigma, ell, 2 * r * r - 1)
            assert ball_riesz_radial(k, ell, sigma, r) == pytest.approx(expected, rel=1e-12)


class TestDiskSolution:
    """Tests for DiskSolution."""

    def test_order_checks(self):
        """Test that s must lie in (0, 1/2) and match the expansion weight."""
        expansion = DiskExpansion(-0.3, 2, {ZernikeIndex(0, 0, 0): 1.0})
        with pytest.raises(ParamError):
            DiskSolution(expansion, 0.6)
        with pytest.raises(ParamError):
            DiskSolution(expansion, 0.25)
        with pytest.raises(ParamError):
            solve_fractional_disk(cubic_gaussian_rhs, 0.5, 4)

    def test_zero_rhs(self):
        """Test that f = 0 gives u = 0 everywhere."""
        solution = solve_fractional_disk(lambda x, y: np.zeros_like(x), 0.3, 4)
        assert solution.terms == []
        assert solution(0.2, 0.1) == 0.0
        _, _, grid = solution.grid(5, 4, 1.5)
        assert grid.shape == (4, 5)
        assert not grid.any()

    def test_pointwise_matches_vectorized(self):
        """Test that __call__ (riesz_apply per term) and evaluate agree."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 8)
        for x, y in [(0.3, 0.2), (-0.5, 0.6), (1.3, -0.4), (0.0, 2.0)]:
            assert solution(x, y) == pytest.approx(solution.evaluate(x, y), rel=1e-9, abs=1e-12)

    def test_unit_circle(self):
        """Test that a point on |x| = 1 evaluates without error."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 6)
        assert solution(1.0, 0.0) == pytest.approx(solution.evaluate(1.0, 0.0), rel=1e-6)

    def test_modes(self):
        """Test the retained Fourier modes of the cubic right-hand side."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 8)
        assert (1, 1) in solution.modes()
        assert (3, 1) in solution.modes()

    def test_plot_grid_shape(self):
        """Test the interpolated plotting grid shape."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 6)
        xs, ys, grid = solution.plot_grid(7, 6, 1.5)
        assert xs.shape == (7,)
        assert ys.shape == (6,)
        assert grid.shape == (6, 7)
        assert np.all(np.isfinite(grid))

    def test_sample_points(self):
        """Test the two sampling rings."""
        points = interior_sample_points(6, radius=0.8)
        assert len(points) == 6
        radii = sorted({round(math.hypot(x, y), 12) for x, y in points})
        assert radii == [0.4, 0.8]

    @pytest.mark.slow
    def test_residual(self):
        """Test that the oracle fractional Laplacian of u reproduces f at 12 interior points."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 24)
        report = disk_residual(solution, cubic_gaussian_rhs, interior_sample_points(12), OracleConfig(tol=1e-5))
        assert len(report.residuals) == 12
        assert report.max_residual <= 1e-4

    def test_mode_selectivity(self):
        """Test that only the cosine modes ell = 1 and ell = 3 carry coefficients above 1e-10."""
        solution = solve_fractional_disk(cubic_gaussian_rhs, 1 / 3, 24)
        significant = {(idx.ell, idx.j) for idx, c in solution.expansion.coeffs.items() if abs(c) > 1e-10}
        assert significant == {(1, 1), (3, 1)}

    def test_far_field_decay(self):
        """Test the log-log slope of the dominant mode on [4, 8] against r^-(d + 2 ell) + 2s."""
        s = 1 / 3
        solution = solve_fractional_disk(cubic_gaussian_rhs, s, 24)
        profile = solution.radial_profile(1, 1)
        r = np.linspace(4.0, 8.0, 17)
        slope = np.polyfit(np.log(r), np.log(np.abs(profile(r))), 1)[0]
        expected = -(2 + 2 * 1) + 2 * s
        assert slope == pytest.approx(expected, rel=0.05)
        # the cubic mode decays faster
        cubic = solution.radial_profile(3, 1)
        assert abs(cubic(8.0)) * 8.0**3 < abs(profile(8.0)) * 8.0


class TestIntervalSolver:
    """Tests for solve_fractional_interval."""

    def test_coefficients_recovered(self):
        """Test that a single weighted Jacobi polynomial is recovered."""
        s = 0.3

        def f(x):
            return (1 - x * x) ** s * jacobi_eval(2, s, s, x)

        solution = solve_fractional_interval(f, s, 4)
        assert solution.weight == s
        assert solution.coeffs == pytest.approx([0.0, 0.0, 1.0, 0.0, 0.0], abs=1e-12)
        assert solution.synthesize(0.4) == pytest.approx(f(0.4), rel=1e-12)
        assert solution.synthesize(1.2) == 0.0

    def test_solution_is_riesz_potential(self):
        """Test that u sums the Riesz potentials of the basis."""
        s = 0.3

        def f(x):
            return (1 - x * x) ** s * jacobi_eval(2, s, s, x)

        solution = solve_fractional_interval(f, s, 4)
        basis = BasisFunction(RowId.T1R1, n=2, params={"a": s})
        for t in (0.4, 1.6):
            expected = riesz_apply(basis, s, EvalPoint.of(t)).value
            assert solution(t) == pytest.approx(expected, rel=1e-10)

    def test_eigen_weight(self):
        """Test weight -s, where u is Gamma(n+1-2s)/n! P_n^(-s,-s) inside the interval."""
        s = 0.3

        def f(x):
            return (1 - x * x) ** -s * jacobi_eval(2, -s, -s, x)

        solution = solve_fractional_interval(f, s, 4, weight=-s)
        expected = sc.gamma(2 + 1 - 2 * s) / 2 * sc.eval_jacobi(2, -s, -s, 0.4)
        assert solution(0.4) == pytest.approx(expected, rel=1e-9)

    def test_invalid(self):
        """Test order and weight ranges."""
        with pytest.raises(ParamError):
            solve_fractional_interval(lambda x: x, 0.5, 4)
        with pytest.raises(ParamError):
            solve_fractional_interval(lambda x: x, 0.3, 4, weight=-1.0)
