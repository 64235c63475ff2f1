"""Gauss rules and graded panel layouts shared by the oracle and the spectral solver."""

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import eigh_tridiagonal
from scipy.special import betaln

from fraclap.utils.errors import ParamError
from fraclap.utils.special_functions import gamma_ratio


@lru_cache(maxsize=64)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre nodes and weights on [-1, 1]."""
    if n < 1:
        raise ParamError(f"Number of nodes must be positive: {n}")
    return leggauss(n)


@lru_cache(maxsize=256)
def gauss_jacobi(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Compute n-point Gauss-Jacobi nodes and weights on [-1, 1].

    Uses the Golub-Welsch algorithm on the monic Jacobi recurrence. The
    weight function is w(x) = (1-x)^alpha * (1+x)^beta.

    Args:
        n: Number of nodes.
        alpha: Exponent on (1-x), > -1.
        beta: Exponent on (1+x), > -1.

    Returns:
        (nodes, weights) sorted by node.

    Raises:
        ParamError: If n < 1 or an exponent is <= -1.
    """
    if n < 1:
        raise ParamError(f"Number of nodes must be positive: {n}")
    if alpha <= -1 or beta <= -1:
        raise ParamError(f"Jacobi exponents must exceed -1: alpha={alpha}, beta={beta}")
    ab = alpha + beta
    i = np.arange(n, dtype=float)
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    if n > 1:
        k = i[1:]
        diag[1:] = (beta**2 - alpha**2) / ((2 * k + ab) * (2 * k + ab + 2))

    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = 4.0 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab))
        if n > 2:
            j = np.arange(2, n, dtype=float)
            s = 2 * j + ab
            off[1:] = 4 * j * (j + alpha) * (j + beta) * (j + ab) / (s**2 * (s**2 - 1))
    nodes, vecs = eigh_tridiagonal(diag, np.sqrt(off))
    mu0 = np.exp((ab + 1) * np.log(2.0) + betaln(alpha + 1, beta + 1))
    weights = mu0 * vecs[0, :] ** 2
    return nodes, weights


def mapped_rule(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule mapped to [lo, hi]."""
    t, w = gauss_legendre(n)
    half = 0.5 * (hi - lo)
    return lo + half * (t + 1.0), half * w


def singular_start_rule(h: float, exponent: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Rule for integral_0^h g(u) u^exponent du, returning nodes and weights that absorb u^exponent."""
    t, w = gauss_jacobi(n, 0.0, exponent)
    u = 0.5 * h * (t + 1.0)
    return u, w * (0.5 * h) ** (exponent + 1.0)


def graded_panels(
    lo: float,
    hi: float,
    refine_lo: bool,
    refine_hi: bool,
    ratio: float = 0.15,
    levels: int = 20,
    min_width: float = 0.0,
) -> list[tuple[float, float]]:
    """Split [lo, hi] into panels that shrink geometrically toward singular endpoints.

    Args:
        lo: Left end.
        hi: Right end.
        refine_lo: Grade toward lo.
        refine_hi: Grade toward hi.
        ratio: Geometric ratio between consecutive panel widths.
        levels: Number of graded panels per refined end.
        min_width: Panels narrower than this are dropped.

    Returns:
        List of (a, b) panels covering [lo, hi] up to dropped slivers.
    """
    if hi <= lo:
        return []
    if refine_lo and refine_hi:
        mid = 0.5 * (lo + hi)
        return graded_panels(lo, mid, True, False, ratio, levels, min_width) + graded_panels(
            mid, hi, False, True, ratio, levels, min_width
        )
    if not (refine_lo or refine_hi):
        return [(lo, hi)]
    length = hi - lo
    offsets = [length * ratio**k for k in range(levels, -1, -1)]
    if refine_lo:
        edges = [lo] + [lo + o for o in offsets]
    else:
        edges = [hi - o for o in reversed(offsets)] + [hi]
    panels = []
    for a, b in zip(edges[:-1], edges[1:]):
        if b - a > min_width:
            panels.append((a, b))
    return panels


def geometric_far_panels(start: float, stop: float, max_width: float) -> list[tuple[float, float]]:
    """Panels from start to stop whose widths double, capped at max_width."""
    panels = []
    a = start
    while a < stop:
        b = min(stop, a + min(max(a, 1e-3), max_width))
        panels.append((a, b))
        a = b
    return panels


def rule_on_panels(panels: Iterable[tuple[float, float]], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Concatenate mapped Gauss-Legendre rules over a list of panels."""
    nodes, weights = [], []
    for a, b in panels:
        x, w = mapped_rule(a, b, n)
        nodes.append(x)
        weights.append(w)
    if not nodes:
        return np.empty(0), np.empty(0)
    return np.concatenate(nodes), np.concatenate(weights)


def jacobi_norm(n: int, a: float, b: float) -> float:
    """Squared norm of P_n^(a,b) against (1-x)^a (1+x)^b on [-1, 1]."""
    if n == 0:
        return float(np.exp((a + b + 1) * np.log(2.0) + betaln(a + 1, b + 1)))
    return 2.0 ** (a + b + 1) / (2 * n + a + b + 1) * gamma_ratio(
        [n + a + 1, n + b + 1], [n + a + b + 1, n + 1]
    )


def breakpoints_between(points: Sequence[float], lo: float, hi: float) -> list[float]:
    """Sorted unique points strictly inside (lo, hi)."""
    inner = sorted({float(p) for p in points if lo < p < hi})
    return inner
