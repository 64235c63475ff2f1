"""Exception hierarchy for fraclap."""

from typing import Optional


class FracLapError(Exception):
    """Base class for all fraclap errors."""


class PoleError(FracLapError):
    """Gamma function evaluated at a non-positive integer."""


class DivergenceError(FracLapError):
    """Hypergeometric series requested outside its disk of convergence."""


class NonConvergenceError(FracLapError):
    """Series did not settle within the term budget."""


class ParamError(FracLapError, ValueError):
    """Parameter outside the admissible range of a family or routine."""


class DomainError(FracLapError, ValueError):
    """Argument outside the domain of a function."""


class ValidityError(FracLapError):
    """The parameter-shift theorem does not apply to the given spec and order.

    Attributes:
        report: The ValidityReport listing the failed inequalities.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report

    @property
    def failed_conditions(self) -> list[str]:
        if self.report is None:
            return []
        return list(self.report.failed_conditions)


class PatternError(FracLapError):
    """Residue expansion hit integer-spaced parameters (logarithmic case)."""


class UnsupportedSignature(FracLapError):
    """No reduction is registered for the Meijer-G signature."""


class BranchError(FracLapError):
    """Evaluation requested on an excluded boundary, e.g. |x| = 1."""


class NearPoleError(FracLapError):
    """Perturbation and extrapolation near a pole failed to settle."""


class QuadratureError(FracLapError):
    """Quadrature error estimate exceeds the requested tolerance.

    Attributes:
        value: Best available value.
        err_est: Error estimate that triggered the failure.
    """

    def __init__(self, message: str, value: Optional[float] = None, err_est: Optional[float] = None):
        super().__init__(message)
        self.value = value
        self.err_est = err_est


class UnsupportedDimension(FracLapError):
    """Oracle requested in a dimension it does not cover."""


class ZernikeIndexError(FracLapError, IndexError):
    """Zernike index violates the parity or range rules."""


class CorrectedFormWarning(UserWarning):
    """A closed form departs from its tabulated expression after correction."""
