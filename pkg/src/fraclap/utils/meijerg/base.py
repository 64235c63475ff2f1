"""Meijer-G parameter records and the identities that rewrite them."""

import json
from dataclasses import dataclass, field, replace
from typing import Any, Optional, Union

from fraclap.utils.errors import ParamError

SCHEMA_VERSION = 1
# Two parameters closer than this are treated as equal by cancel_reduce.
MATCH_TOL = 1e-13


@dataclass(frozen=True)
class MeijerGSpec:
    """Record of prefactor * V_ell * |x|^kappa * G^{m,n}_{p,q}(|x|^2 | a; b).

    Attributes:
        m: Number of leading lower parameters in the gamma numerator.
        n: Number of leading upper parameters in the gamma numerator.
        p: Length of the upper list.
        q: Length of the lower list.
        a: Upper parameters.
        b: Lower parameters.
        prefactor: Scalar in front of the G-function.
        monomial_power: Exponent kappa of the |x|^kappa factor.
        argument_kind: Always "x_squared".
        d: Dimension of the ambient space.
        ell: Degree of the solid harmonic carried outside the record.
        reciprocal: True when the argument is 1/|x|^2 (after argument_inversion).
    """

    m: int
    n: int
    p: int
    q: int
    a: tuple[float, ...] = field(default_factory=tuple)
    b: tuple[float, ...] = field(default_factory=tuple)
    prefactor: float = 1.0
    monomial_power: float = 0.0
    argument_kind: str = "x_squared"
    d: int = 1
    ell: int = 0
    reciprocal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        if len(self.a) != self.p:
            raise ParamError(f"Upper list has length {len(self.a)}, expected p = {self.p}")
        if len(self.b) != self.q:
            raise ParamError(f"Lower list has length {len(self.b)}, expected q = {self.q}")
        if not 0 <= self.m <= self.q:
            raise ParamError(f"Index m = {self.m} outside [0, q = {self.q}]")
        if not 0 <= self.n <= self.p:
            raise ParamError(f"Index n = {self.n} outside [0, p = {self.p}]")
        if self.argument_kind != "x_squared":
            raise ParamError(f"Unknown argument kind: {self.argument_kind}. Available: ['x_squared']")
        if self.d < 1 or self.ell < 0:
            raise ParamError(f"Need d >= 1 and ell >= 0, got d = {self.d}, ell = {self.ell}")

    @property
    def signature(self) -> tuple[int, int, int, int]:
        return self.m, self.n, self.p, self.q

    def pole_separation_violations(self) -> list[tuple[int, int]]:
        """Index pairs (k, j), k < n and j < m, with a_k - b_j a positive integer."""
        bad = []
        for k in range(self.n):
            for j in range(self.m):
                diff = self.a[k] - self.b[j]
                if diff > 0.5 and abs(diff - round(diff)) <= MATCH_TOL:
                    bad.append((k, j))
        return bad

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "a": list(self.a),
            "b": list(self.b),
            "prefactor": self.prefactor,
            "monomial_power": self.monomial_power,
            "d": self.d,
            "ell": self.ell,
            "reciprocal": self.reciprocal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, payload: Union[str, dict[str, Any]]) -> "MeijerGSpec":
        """Rebuild a spec from to_json output.

        Raises:
            ParamError: On a schema mismatch or missing key.
        """
        data = json.loads(payload) if isinstance(payload, str) else dict(payload)
        schema = data.get("schema", SCHEMA_VERSION)
        if schema != SCHEMA_VERSION:
            raise ParamError(f"Unsupported Meijer-G schema: {schema}. Expected {SCHEMA_VERSION}")
        try:
            return cls(
                m=int(data["m"]),
                n=int(data["n"]),
                p=int(data["p"]),
                q=int(data["q"]),
                a=tuple(data["a"]),
                b=tuple(data["b"]),
                prefactor=float(data.get("prefactor", 1.0)),
                monomial_power=float(data.get("monomial_power", 0.0)),
                d=int(data.get("d", 1)),
                ell=int(data.get("ell", 0)),
                reciprocal=bool(data.get("reciprocal", False)),
            )
        except KeyError as e:
            raise ParamError(f"Meijer-G record is missing key {e}") from None


def multiplicative_shift(g: MeijerGSpec, mu: float) -> MeijerGSpec:
    """Absorb z^mu into the G-function: all parameters move by +mu, kappa by -2 mu."""
    if mu == 0:
        return g
    return replace(
        g,
        a=tuple(v + mu for v in g.a),
        b=tuple(v + mu for v in g.b),
        monomial_power=g.monomial_power - 2.0 * mu,
    )


def argument_inversion(g: MeijerGSpec) -> MeijerGSpec:
    """G^{m,n}_{p,q}(z | a; b) = G^{n,m}_{q,p}(1/z | 1-b; 1-a)."""
    return replace(
        g,
        m=g.n,
        n=g.m,
        p=g.q,
        q=g.p,
        a=tuple(1.0 - v for v in g.b),
        b=tuple(1.0 - v for v in g.a),
        reciprocal=not g.reciprocal,
    )


def _find_pair(upper: tuple[float, ...], lower: tuple[float, ...]) -> Optional[tuple[int, int]]:
    for k, av in enumerate(upper):
        for j, bv in enumerate(lower):
            if abs(av - bv) <= MATCH_TOL * max(1.0, abs(av)):
                return k, j
    return None


def _drop(values: tuple[float, ...], index: int) -> tuple[float, ...]:
    return values[:index] + values[index + 1 :]


def cancel_reduce(g: MeijerGSpec) -> MeijerGSpec:
    """Remove one upper/lower pair whose gamma factors cancel.

    A leading upper parameter (index < n) equal to a trailing lower one
    (index >= m) lowers n, p, q by one. A trailing upper parameter equal to
    a leading lower one lowers m, p, q by one. Returns g unchanged when no
    pair matches.
    """
    pair = _find_pair(g.a[: g.n], g.b[g.m :])
    if pair is not None:
        k, j = pair
        return replace(
            g, n=g.n - 1, p=g.p - 1, q=g.q - 1, a=_drop(g.a, k), b=_drop(g.b, g.m + j)
        )
    pair = _find_pair(g.a[g.n :], g.b[: g.m])
    if pair is not None:
        k, j = pair
        return replace(
            g, m=g.m - 1, p=g.p - 1, q=g.q - 1, a=_drop(g.a, g.n + k), b=_drop(g.b, j)
        )
    return g


def cancel_all(g: MeijerGSpec) -> MeijerGSpec:
    """Apply cancel_reduce until nothing matches."""
    while True:
        reduced = cancel_reduce(g)
        if reduced is g:
            return g
        g = reduced


def same_parameters(g: MeijerGSpec, h: MeijerGSpec, tol: float = 1e-14) -> bool:
    """Compare signatures and parameter lists up to order inside each gamma group."""
    if g.signature != h.signature:
        return False

    def groups(spec: MeijerGSpec):
        return (
            sorted(spec.a[: spec.n]),
            sorted(spec.a[spec.n :]),
            sorted(spec.b[: spec.m]),
            sorted(spec.b[spec.m :]),
        )

    for left, right in zip(groups(g), groups(h)):
        if any(abs(u - v) > tol * max(1.0, abs(u)) for u, v in zip(left, right)):
            return False
    return abs(g.prefactor - h.prefactor) <= tol * max(1.0, abs(g.prefactor))
