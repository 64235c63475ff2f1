"""Meijer-G forms of the catalog rows and their tabulated fractional images."""

import math

from fraclap.utils.classical_bases import BasisFunction, RowId, jacobi_at_one
from fraclap.utils.meijerg.base import MeijerGSpec
from fraclap.utils.special_functions import gamma, parity_split, pochhammer

SQRT2 = math.sqrt(2.0)
SQRTPI = math.sqrt(math.pi)


def polynomial_prefactor(f: BasisFunction) -> float:
    """Constant in front of the Meijer-G form of the weighted polynomial rows."""
    n = f.n
    row = f.row_id
    if row == RowId.T1R2:
        lam = f.get("lam")
        return gamma(lam + n + 0.5) * pochhammer(2 * lam, n) / (math.factorial(n) * pochhammer(lam + 0.5, n))
    if row == RowId.T1R3:
        return gamma(n + 0.5) / (math.factorial(n) * jacobi_at_one(n, -0.5))
    if row == RowId.T1R4:
        return (n + 1) * gamma(n + 1.5) / (math.factorial(n) * jacobi_at_one(n, 0.5))
    return gamma(f.get("a") + n + 1) / math.factorial(n)


def _first_upper(f: BasisFunction) -> float:
    k = f.n // 2
    row = f.row_id
    if row == RowId.T1R1:
        return f.get("a") + k + 1
    if row == RowId.T1R2:
        return f.get("lam") + k + 0.5
    if row == RowId.T1R3:
        return k + 0.5
    return k + 1.5


def catalog_spec(f: BasisFunction) -> MeijerGSpec:
    """Meijer-G record of a catalog function.

    One-dimensional rows with an x^(n - 2 floor(n/2)) factor carry it as
    ell; higher-dimensional rows carry d and ell of the basis function.
    """
    row = f.row_id
    n = f.n
    k, odd = parity_split(n)

    if row in (RowId.T1R1, RowId.T1R2, RowId.T1R3, RowId.T1R4):
        return MeijerGSpec(
            2, 0, 2, 2,
            a=(_first_upper(f), -n + k + 0.5),
            b=(0.0, -n + 2 * k + 0.5),
            prefactor=polynomial_prefactor(f),
            ell=odd,
        )
    if row == RowId.T1R5:
        a, b = f.get("a"), f.get("b")
        return MeijerGSpec(2, 0, 2, 2, a=(a + b + n + 1, -n), b=(0.0, b), prefactor=polynomial_prefactor(f))
    if row == RowId.T1R6:
        return MeijerGSpec(2, 0, 1, 2, a=(-n + k + 0.5,), b=(0.0, -n + 2 * k + 0.5), prefactor=2.0**n, ell=odd)
    if row in (RowId.T1R7, RowId.HD_B):
        alpha = f.get("alpha")
        return MeijerGSpec(
            1, 1, 1, 2, a=(-n - alpha,), b=(0.0, -alpha), prefactor=1.0 / math.factorial(n), d=f.d, ell=f.ell
        )
    if row == RowId.T1R8:
        nu = f.get("nu")
        return MeijerGSpec(1, 0, 0, 2, a=(), b=(nu / 2, -nu / 2))
    if row in (RowId.T1R9, RowId.T1R10):
        nu = f.get("nu")
        shift = f.get("phase") / math.pi + ((nu + 1) / 2 if row == RowId.T1R9 else nu / 2)
        return MeijerGSpec(
            2, 2, 3, 5,
            a=(0.25, 0.75, shift),
            b=(nu / 2, (nu + 1) / 2, -nu / 2, (1 - nu) / 2, shift),
            prefactor=1.0 / SQRT2,
        )
    if row == RowId.T1R11:
        mu, nu = f.get("mu"), f.get("nu")
        return MeijerGSpec(
            1, 2, 2, 4,
            a=(0.0, 0.5),
            b=((mu + nu) / 2, -(mu + nu) / 2, (mu - nu) / 2, (nu - mu) / 2),
            prefactor=1.0 / SQRTPI,
        )
    if row == RowId.T1R12:
        nu = f.get("nu")
        return MeijerGSpec(2, 0, 1, 3, a=(-(nu + 1) / 2,), b=(nu / 2, -nu / 2, -(nu + 1) / 2))
    if row == RowId.T1R13:
        nu = f.get("nu")
        return MeijerGSpec(
            2, 2, 3, 5,
            a=(0.25, 0.75, -(nu + 1) / 2),
            b=(-nu / 2, nu / 2, -(nu + 1) / 2, (1 - nu) / 2, (nu + 1) / 2),
            prefactor=1.0 / SQRT2,
        )
    if row == RowId.T1R14:
        nu = f.get("nu")
        return MeijerGSpec(
            2, 2, 3, 5,
            a=(0.25, 0.75, -nu / 2),
            b=((nu + 1) / 2, (1 - nu) / 2, -nu / 2, -nu / 2, nu / 2),
            prefactor=1.0 / SQRT2,
        )

    a, b = f.get("a"), f.get("b")
    prefactor = gamma(a + n + 1) / math.factorial(n)
    if row == RowId.HD_A:
        return MeijerGSpec(2, 0, 2, 2, a=(a + n + 1, -b - n), b=(-b, 0.0), prefactor=prefactor, d=f.d, ell=f.ell)
    if row == RowId.HD_C:
        return MeijerGSpec(0, 2, 2, 2, a=(-b - n, a + n + 1), b=(0.0, -b), prefactor=prefactor, d=f.d, ell=f.ell)
    return MeijerGSpec(
        2, 0, 2, 2, a=(a + 1, a + b + 1), b=(-n, a + b + n + 1), prefactor=prefactor, d=f.d, ell=f.ell
    )


def tabulated_output(f: BasisFunction, s: float) -> MeijerGSpec:
    """Closed Meijer-G form of (-Delta)^s f, written out row by row.

    Serves as the reference that apply_fractional followed by cancel_all
    must reproduce.
    """
    row = f.row_id
    n = f.n
    k, odd = parity_split(n)
    scale = 4.0**s

    if row in (RowId.T1R1, RowId.T1R2, RowId.T1R3, RowId.T1R4):
        return MeijerGSpec(
            2, 1, 3, 3,
            a=(0.5 - s - odd, _first_upper(f) - s, -n + k + 0.5 - s),
            b=(0.0, -n + 2 * k + 0.5 - s, 0.5 - odd),
            prefactor=scale * polynomial_prefactor(f),
            ell=odd,
        )
    if row == RowId.T1R5:
        a, b = f.get("a"), f.get("b")
        return MeijerGSpec(
            2, 1, 3, 3,
            a=(0.5 - s, a + b + n - s + 1, -n - s),
            b=(0.0, b - s, 0.5),
            prefactor=scale * polynomial_prefactor(f),
        )
    if row == RowId.T1R6:
        return MeijerGSpec(
            2, 1, 2, 3,
            a=(-n - s + 2 * k + 0.5, -n - s + k + 0.5),
            b=(0.0, -n - s + 2 * k + 0.5, -n + 2 * k + 0.5),
            prefactor=scale * 2.0**n,
            ell=odd,
        )
    if row == RowId.T1R7:
        alpha = f.get("alpha")
        return MeijerGSpec(
            1, 2, 2, 3,
            a=(0.5 - s, -n - s - alpha),
            b=(0.0, -alpha - s, 0.5),
            prefactor=scale / math.factorial(n),
        )
    if row == RowId.T1R8:
        nu = f.get("nu")
        return MeijerGSpec(2, 1, 2, 4, a=(0.5 - s, -s), b=(0.0, nu / 2 - s, 0.5, -nu / 2 - s), prefactor=scale)
    if row in (RowId.T1R9, RowId.T1R10):
        nu = f.get("nu")
        shift = f.get("phase") / math.pi + ((nu + 1) / 2 if row == RowId.T1R9 else nu / 2)
        return MeijerGSpec(
            3, 3, 5, 7,
            a=(0.25 - s, 0.5 - s, 0.75 - s, -s, shift - s),
            b=(0.0, nu / 2 - s, (nu + 1) / 2 - s, 0.5, (1 - nu) / 2 - s, -s - nu / 2, shift - s),
            prefactor=2.0 ** (2 * s - 0.5),
        )
    if row == RowId.T1R11:
        mu, nu = f.get("mu"), f.get("nu")
        return MeijerGSpec(
            2, 3, 4, 6,
            a=(0.5 - s, -s, 0.5 - s, -s),
            b=(0.0, (mu + nu) / 2 - s, -(mu + nu) / 2 - s, (mu - nu) / 2 - s, (nu - mu) / 2 - s, 0.5),
            prefactor=scale / SQRTPI,
        )
    if row == RowId.T1R12:
        nu = f.get("nu")
        return MeijerGSpec(
            3, 1, 3, 5,
            a=(0.5 - s, -(nu + 1) / 2 - s, -s),
            b=(0.0, nu / 2 - s, -nu / 2 - s, -(nu + 1) / 2 - s, 0.5),
            prefactor=scale,
        )
    if row == RowId.T1R13:
        nu = f.get("nu")
        return MeijerGSpec(
            3, 3, 5, 7,
            a=(0.5 - s, 0.25 - s, 0.75 - s, -(nu + 1) / 2 - s, -s),
            b=(0.0, -nu / 2 - s, nu / 2 - s, -(nu + 1) / 2 - s, (1 - nu) / 2 - s, (nu + 1) / 2 - s, 0.5),
            prefactor=2.0 ** (2 * s - 0.5),
        )
    if row == RowId.T1R14:
        nu = f.get("nu")
        return MeijerGSpec(
            3, 3, 5, 7,
            a=(0.25 - s, 0.5 - s, 0.75 - s, -s, -s - nu / 2),
            b=(0.0, (1 - 2 * s - nu) / 2, (1 - 2 * s + nu) / 2, 0.5, -s - nu / 2, -s - nu / 2, (nu - 2 * s) / 2),
            prefactor=2.0 ** (2 * s - 0.5),
        )

    d, ell = f.d, f.ell
    edge = 1.0 - (d + 2 * ell) / 2.0
    if row == RowId.HD_B:
        alpha = f.get("alpha")
        return MeijerGSpec(
            1, 2, 2, 3,
            a=(edge - s, -n - s - alpha),
            b=(0.0, -s - alpha, edge),
            prefactor=scale / math.factorial(n),
            d=d,
            ell=ell,
        )
    a, b = f.get("a"), f.get("b")
    prefactor = scale * gamma(a + n + 1) / math.factorial(n)
    if row == RowId.HD_A:
        return MeijerGSpec(
            2, 1, 3, 3, a=(edge - s, -b - n - s, a + n - s + 1), b=(0.0, -b - s, edge), prefactor=prefactor, d=d, ell=ell
        )
    if row == RowId.HD_C:
        return MeijerGSpec(
            1, 3, 4, 4,
            a=(edge - s, -b - n - s, a + n - s + 1, -s),
            b=(0.0, edge, -b - s, -s),
            prefactor=prefactor,
            d=d,
            ell=ell,
        )
    return MeijerGSpec(
        3, 1, 4, 4,
        a=(edge - s, a - s + 1, a + b - s + 1, -s),
        b=(0.0, -n - s, a + b + n - s + 1, edge),
        prefactor=prefactor,
        d=d,
        ell=ell,
    )
