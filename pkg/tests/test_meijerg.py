"""Tests for the Meijer-G calculus."""

import math

import pytest
import scipy.special as sc

from fraclap.utils.classical_bases import BasisFunction, EvalPoint, RowId, basis_eval, radial_part
from fraclap.utils.errors import BranchError, ParamError, UnsupportedSignature, ValidityError
from fraclap.utils.meijerg import (
    INSIDE,
    OUTSIDE,
    MeijerGSpec,
    apply_fractional,
    argument_inversion,
    cancel_all,
    cancel_reduce,
    catalog_spec,
    check_validity,
    g_function_value,
    meijerg_eval,
    meijerg_eval_1d,
    multiplicative_shift,
    pfq_as_meijerg,
    same_parameters,
    tabulated_output,
    to_hypergeometric,
)
from fraclap.utils.meijerg.reduction import CLOSED_FORMS, reduce_1122, reduce_2124, select_branch
from fraclap.utils.verification import ROW_SAMPLES


class TestMeijerGSpec:
    """Tests for MeijerGSpec records."""

    def test_length_checks(self):
        """Test that list lengths must match p and q."""
        with pytest.raises(ParamError):
            MeijerGSpec(1, 0, 1, 1, a=(0.5,), b=())
        with pytest.raises(ParamError):
            MeijerGSpec(2, 0, 0, 1, a=(), b=(0.0,))

    def test_json_round_trip(self):
        """Test serialization through to_json and from_json."""
        g = MeijerGSpec(2, 1, 3, 3, a=(0.1, 0.2, 0.3), b=(0.0, 0.5, -0.5), prefactor=2.5, d=2, ell=1)
        assert MeijerGSpec.from_json(g.to_json()) == g

    def test_json_schema_mismatch(self):
        """Test that an unknown schema is rejected."""
        payload = MeijerGSpec(1, 0, 0, 1, b=(0.0,)).to_dict()
        payload["schema"] = 99
        with pytest.raises(ParamError, match="schema"):
            MeijerGSpec.from_json(payload)

    def test_json_missing_key(self):
        """Test that a missing key raises ParamError."""
        with pytest.raises(ParamError, match="missing"):
            MeijerGSpec.from_json({"m": 1, "n": 0, "p": 0})

    def test_pole_separation(self):
        """Test detection of a_k - b_j in the positive integers."""
        g = MeijerGSpec(1, 1, 1, 1, a=(2.25,), b=(0.25,))
        assert g.pole_separation_violations() == [(0, 0)]
        assert MeijerGSpec(1, 1, 1, 1, a=(0.25,), b=(2.25,)).pole_separation_violations() == []


class TestIdentities:
    """Tests for shift, inversion and cancellation."""

    def test_multiplicative_shift(self):
        """Test that z^mu moves every parameter and the monomial."""
        g = MeijerGSpec(1, 1, 1, 2, a=(0.5,), b=(0.0, 0.25))
        shifted = multiplicative_shift(g, 0.3)
        assert shifted.a == pytest.approx((0.8,))
        assert shifted.b == pytest.approx((0.3, 0.55))
        assert shifted.monomial_power == pytest.approx(-0.6)
        assert multiplicative_shift(g, 0.0) is g

    def test_shift_preserves_value(self):
        """Test that r^kappa G(r^2) is unchanged by the shift."""
        g = MeijerGSpec(1, 0, 0, 2, b=(0.5, -0.5))
        r = 0.7
        assert meijerg_eval(multiplicative_shift(g, 0.4), r) == pytest.approx(meijerg_eval(g, r), rel=1e-12)

    def test_inversion_involution(self):
        """Test that inverting twice restores the record."""
        g = MeijerGSpec(2, 1, 3, 3, a=(0.1, 0.2, 0.3), b=(0.0, 0.5, -0.5))
        once = argument_inversion(g)
        assert once.signature == (1, 2, 3, 3)
        assert once.reciprocal
        assert argument_inversion(once) == g

    def test_inversion_preserves_value(self):
        """Test G(z | a; b) = G(1/z | 1-b; 1-a) through the reciprocal flag."""
        g = MeijerGSpec(1, 0, 0, 2, b=(0.5, -0.5))
        assert meijerg_eval(argument_inversion(g), 0.8) == pytest.approx(meijerg_eval(g, 0.8), rel=1e-12)

    def test_cancel_leading_upper(self):
        """Test that a leading upper equal to a trailing lower lowers n, p and q."""
        g = MeijerGSpec(1, 1, 2, 2, a=(0.3, 0.7), b=(0.1, 0.3))
        reduced = cancel_reduce(g)
        assert reduced.signature == (1, 0, 1, 1)
        assert reduced.a == (0.7,)
        assert reduced.b == (0.1,)

    def test_cancel_trailing_upper(self):
        """Test that a trailing upper equal to a leading lower lowers m, p and q."""
        g = MeijerGSpec(2, 0, 1, 2, a=(0.4,), b=(0.4, 0.0))
        assert cancel_all(g).signature == (1, 0, 0, 1)

    def test_cancel_nothing(self):
        """Test that a record without matches is returned as is."""
        g = MeijerGSpec(1, 1, 1, 2, a=(0.5,), b=(0.0, 0.25))
        assert cancel_reduce(g) is g

    def test_same_parameters_ignores_group_order(self):
        """Test comparison up to order within each gamma group."""
        g = MeijerGSpec(2, 0, 2, 2, a=(0.1, 0.2), b=(0.0, 0.5))
        h = MeijerGSpec(2, 0, 2, 2, a=(0.2, 0.1), b=(0.5, 0.0))
        assert same_parameters(g, h)
        assert not same_parameters(g, MeijerGSpec(2, 0, 2, 2, a=(0.1, 0.3), b=(0.0, 0.5)))


class TestReduction:
    """Tests for the hypergeometric expansion of G-functions."""

    @pytest.mark.parametrize("z", [0.4, 2.5])
    def test_1122_matches_closed_form(self, z):
        """Test the generic expansion against the single-2F1 closed form on both branches."""
        a, b = (0.2, 0.6), (0.1, -0.3)
        g = MeijerGSpec(1, 1, 2, 2, a=a, b=b)
        value, _, perturbed = g_function_value(g, z)
        assert not perturbed
        assert value == pytest.approx(reduce_1122(a, b, z), rel=1e-11)

    def test_2124_matches_closed_form(self):
        """Test a two-term residue sum."""
        a, b = (0.3, 0.45), (0.1, 0.35, -0.2, 0.6)
        g = MeijerGSpec(2, 1, 2, 4, a=a, b=b)
        assert g_function_value(g, 1.7)[0] == pytest.approx(reduce_2124(a, b, 1.7), rel=1e-10)

    @pytest.mark.parametrize(
        "signature, a, b, z",
        [
            ((1, 2, 2, 3), (0.3, 0.45), (0.1, 0.35, -0.2), 0.8),
            ((2, 1, 2, 3), (0.3, 0.45), (0.1, 0.35, -0.2), 1.4),
            ((2, 1, 3, 3), (0.3, 0.45, 0.7), (0.1, 0.35, -0.2), 0.6),
            ((2, 1, 3, 3), (0.3, 0.45, 0.7), (0.1, 0.35, -0.2), 1.8),
        ],
    )
    def test_closed_form_fixtures(self, signature, a, b, z):
        """Test the remaining closed-form reductions against the residue sum."""
        g = MeijerGSpec(*signature, a=a, b=b)
        value, _, perturbed = g_function_value(g, z)
        assert not perturbed
        assert value == pytest.approx(CLOSED_FORMS[signature](a, b, z), rel=1e-10)

    def test_bessel_record(self):
        """Test G^{1,0}_{0,2}(x^2 | nu/2, -nu/2) = J_nu(2x)."""
        g = MeijerGSpec(1, 0, 0, 2, b=(0.75, -0.75))
        assert meijerg_eval(g, 1.3) == pytest.approx(sc.jv(1.5, 2.6), rel=1e-12)

    def test_pfq_as_meijerg(self):
        """Test that the record reproduces 1F1(a; b; -z)."""
        g = pfq_as_meijerg([0.4], [1.7])
        value, _, _ = g_function_value(g, 0.9)
        assert g.prefactor * value == pytest.approx(sc.hyp1f1(0.4, 1.7, -0.9), rel=1e-12)

    @pytest.mark.parametrize(
        "b, order",
        [((0.0, 0.0), 0), ((0.0, 1.0), 1), ((0.5, -0.5), 1), ((1.0, -1.0), 2)],
    )
    def test_integer_spaced_lower_parameters(self, b, order):
        """Test the logarithmic case G^{2,0}_{0,2}(z | b1, b2) = 2 z^((b1+b2)/2) K_(b1-b2)(2 sqrt z)."""
        g = MeijerGSpec(2, 0, 0, 2, b=b)
        z = 0.49
        value, count, logarithmic = g_function_value(g, z)
        assert logarithmic
        assert count == 0
        expected = 2 * z ** ((b[0] + b[1]) / 2) * sc.kv(order, 2 * math.sqrt(z))
        assert value == pytest.approx(expected, rel=1e-12)

    def test_branch_selection(self):
        """Test inside/outside choice and the unit circle for p = q."""
        square = MeijerGSpec(1, 1, 2, 2, a=(0.2, 0.6), b=(0.1, -0.3))
        assert select_branch(square, 0.5) == INSIDE
        assert select_branch(square, 1.5) == OUTSIDE
        with pytest.raises(BranchError):
            select_branch(square, 1.0)
        assert select_branch(MeijerGSpec(1, 0, 0, 2, b=(0.0, 0.5)), 9.0) == INSIDE

    def test_unsupported_branch(self):
        """Test that p < q has no outside expansion."""
        with pytest.raises(UnsupportedSignature):
            to_hypergeometric(MeijerGSpec(1, 0, 0, 2, b=(0.0, 0.5)), OUTSIDE)

    def test_outside_vanishes_for_compact_support(self):
        """Test that G^{2,0}_{2,2} is zero outside the unit disk."""
        f = BasisFunction(RowId.T1R1, n=2, params={"a": 0.5})
        assert meijerg_eval_1d(catalog_spec(f), 1.4) == 0.0


CATALOG_SAMPLES = [sample.basis() for samples in ROW_SAMPLES.values() for sample in samples]
BESSEL_ROWS = {RowId.T1R8, RowId.T1R9, RowId.T1R10, RowId.T1R11, RowId.T1R12, RowId.T1R13, RowId.T1R14}
LINE_SAMPLE_POINTS = (-2.7, -1.6, -0.93, -0.55, -0.2, 0.12, 0.37, 0.71, 1.3, 2.4)
RADIAL_SAMPLE_POINTS = (0.12, 0.2, 0.37, 0.55, 0.71, 0.93, 1.3, 1.6, 2.4, 2.7)


def _sample_id(f: BasisFunction) -> str:
    params = ",".join(f"{k}={v}" for k, v in sorted(f.params.items()))
    return f"{f.row_id.value}-n{f.n}-l{f.ell}-{params}"


class TestCatalog:
    """Tests for the Meijer-G forms of the catalog rows."""

    @pytest.mark.parametrize("f", CATALOG_SAMPLES, ids=_sample_id)
    def test_every_row_matches_classical_form(self, f):
        """Test the Meijer-G record of every row against the classical evaluation at 10 points."""
        bessel = f.row_id in BESSEL_ROWS
        rel, floor = (1e-8, 1e-12) if bessel else (1e-10, 1e-14)
        g = catalog_spec(f)
        if f.d == 1:
            for x in LINE_SAMPLE_POINTS:
                expected = basis_eval(f, EvalPoint.of(x))
                assert meijerg_eval_1d(g, x) == pytest.approx(expected, rel=rel, abs=floor), x
        else:
            for r in RADIAL_SAMPLE_POINTS:
                assert meijerg_eval(g, r) == pytest.approx(radial_part(f, r), rel=rel, abs=floor), r

    @pytest.mark.parametrize(
        "f, reference",
        [
            (BasisFunction(RowId.T1R8, params={"nu": 1.0}), lambda y: sc.jv(1, 2 * y)),
            (BasisFunction(RowId.T1R8, params={"nu": 2.0}), lambda y: sc.jv(2, 2 * y)),
            (BasisFunction(RowId.T1R9, params={"phase": 0.3, "nu": 1.0}), lambda y: math.cos(0.3 + y) * sc.jv(1, y)),
            (BasisFunction(RowId.T1R10, params={"phase": 0.3, "nu": 1.0}), lambda y: math.sin(0.3 + y) * sc.jv(1, y)),
            (BasisFunction(RowId.T1R11, params={"mu": 1.0, "nu": 1.0}), lambda y: sc.jv(1, y) ** 2),
            (BasisFunction(RowId.T1R12, params={"nu": 1.0}), lambda y: sc.yv(1, 2 * y)),
            (BasisFunction(RowId.T1R13, params={"nu": 1.0}), lambda y: math.cos(y) * sc.yv(1, y)),
            (BasisFunction(RowId.T1R14, params={"nu": 1.0}), lambda y: math.sin(y) * sc.yv(1, y)),
        ],
        ids=lambda v: v.row_id.value if isinstance(v, BasisFunction) else None,
    )
    def test_integer_order_bessel_rows(self, f, reference):
        """Test integer orders, where the residue groups collide, against scipy."""
        g = catalog_spec(f)
        for x in (0.2, 0.75, 1.5, 2.6):
            assert meijerg_eval_1d(g, x) == pytest.approx(reference(x), rel=1e-8, abs=1e-12), x

    def test_ball_row_radial(self):
        """Test that an HD_A record gives the radial factor."""
        f = BasisFunction(RowId.HD_A, n=1, params={"a": 0.5, "b": 0.5}, d=2, ell=1, j=1)
        assert meijerg_eval(catalog_spec(f), 0.6) == pytest.approx(radial_part(f, 0.6), rel=1e-10)

    def test_odd_degree_carried_as_harmonic(self):
        """Test that odd degrees set ell = 1 on line rows."""
        assert catalog_spec(BasisFunction(RowId.T1R6, n=5)).ell == 1
        assert catalog_spec(BasisFunction(RowId.T1R6, n=4)).ell == 0


class TestParameterShift:
    """Tests for validity checks and the parameter shift."""

    @pytest.mark.parametrize(
        "f,s",
        [
            (BasisFunction(RowId.T1R1, n=3, params={"a": 0.5}), 0.3),
            (BasisFunction(RowId.T1R6, n=2), 0.3),
            (BasisFunction(RowId.T1R7, n=3, params={"alpha": 0.5}), 0.7),
            (BasisFunction(RowId.T1R8, params={"nu": 1.0}), 0.3),
            (BasisFunction(RowId.HD_A, n=1, params={"a": 0.5, "b": 0.5}, d=2, ell=1, j=1), 0.3),
            (BasisFunction(RowId.HD_B, n=2, params={"alpha": 0.0}, d=3), 0.4),
        ],
    )
    def test_shift_matches_tabulated(self, f, s):
        """Test that apply_fractional then cancel_all reproduces the tabulated record."""
        derived = cancel_all(apply_fractional(catalog_spec(f), s))
        assert same_parameters(derived, tabulated_output(f, s), tol=1e-12)

    def test_admissible_report(self):
        """Test a balanced record with the unit sphere excluded."""
        f = BasisFunction(RowId.HD_A, n=1, params={"a": 0.5, "b": 0.5}, d=2, ell=1, j=1)
        report = check_validity(catalog_spec(f), 0.3)
        assert report.admissible
        assert report.case == "ii"
        assert report.excludes_unit_sphere

    def test_riesz_order_limit(self):
        """Test that a Riesz order of at least d/2 is rejected."""
        f = BasisFunction(RowId.T1R6, n=2)
        report = check_validity(catalog_spec(f), -0.6)
        assert not report.admissible
        assert "order_below_half_dimension" in report.failed_conditions

    def test_zero_order(self):
        """Test that s = 0 is rejected."""
        f = BasisFunction(RowId.T1R6, n=0)
        assert "order_nonzero" in check_validity(catalog_spec(f), 0.0).failed_conditions

    def test_apply_raises_with_report(self):
        """Test that apply_fractional raises ValidityError carrying the failed conditions."""
        f = BasisFunction(RowId.T1R6, n=2)
        with pytest.raises(ValidityError) as info:
            apply_fractional(catalog_spec(f), -0.75)
        assert "order_below_half_dimension" in info.value.failed_conditions

    def test_prefactor_scaling(self):
        """Test the 4^s factor on the prefactor."""
        g = catalog_spec(BasisFunction(RowId.T1R8, params={"nu": 1.0}))
        assert apply_fractional(g, 0.3).prefactor == pytest.approx(g.prefactor * 4**0.3)

    def test_riesz_of_gaussian(self):
        """Test the Riesz potential of exp(-x^2) at the origin.

        In 1D it equals 4^(-sigma) Gamma(1/2 - sigma) / Gamma(1/2).
        """
        sigma = 0.25
        g = cancel_all(apply_fractional(catalog_spec(BasisFunction(RowId.T1R6, n=0)), -sigma))
        expected = 4**-sigma * math.gamma(0.5 - sigma) / math.gamma(0.5)
        assert meijerg_eval(g, 1e-30) == pytest.approx(expected, rel=1e-10)
