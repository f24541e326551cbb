"""Radial action integrals of the form  I = int_{r1}^{r2} sqrt(-A + B/r - C/r^2) dr.

Two independent routes are provided. ``closed_form`` is the elementary
result pi (B / (2 sqrt A) - sqrt C). ``quadrature`` integrates the raw
integrand numerically after the substitution

    r = (r1 + r2)/2 - (r2 - r1)/2 * cos u,    u in [0, pi],

which turns the square-root zeros at both turning points into a smooth
sin(u) factor. The two routes share nothing but the turning points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _gauss_kronrod
from .errors import DomainError, NoTurningPointsError

__all__ = [
    "AbcCoefficients",
    "degenerate_b",
    "turning_points",
    "closed_form",
    "quadrature",
    "inverse_root_integral",
    "eccentricity_integral",
    "eccentricity_closed_form",
    "derivative_identity",
]


@dataclass(frozen=True)
class AbcCoefficients:
    """Coefficients of the effective momentum p(r) = sqrt(-A + B/r - C/r^2)."""

    a_coef: float
    b_coef: float
    c_coef: float

    def __post_init__(self) -> None:
        if not self.a_coef > 0:
            raise DomainError(f"A must be positive, got {self.a_coef!r}")
        if not self.c_coef > 0:
            raise DomainError(f"C must be positive, got {self.c_coef!r}")
        if not math.isfinite(self.b_coef):
            raise DomainError(f"B must be finite, got {self.b_coef!r}")

    @property
    def has_allowed_region(self) -> bool:
        return self.b_coef >= degenerate_b(self.a_coef, self.c_coef)

    @property
    def is_degenerate(self) -> bool:
        return self.b_coef == degenerate_b(self.a_coef, self.c_coef)

    def momentum_squared(self, r):
        return -self.a_coef + self.b_coef / r - self.c_coef / r**2


def degenerate_b(a_coef: float, c_coef: float) -> float:
    """B = 2 sqrt(AC), where both turning points merge."""
    return 2.0 * math.sqrt(a_coef * c_coef)


def _require_allowed(abc: AbcCoefficients) -> None:
    if not abc.has_allowed_region:
        raise NoTurningPointsError(
            f"B={abc.b_coef!r} < 2 sqrt(AC)={degenerate_b(abc.a_coef, abc.c_coef)!r}: "
            "no classically allowed region"
        )


def turning_points(abc: AbcCoefficients) -> tuple[float, float]:
    """Roots 0 < r1 <= r2 of A r^2 - B r + C = 0.

    Uses q = (B + sqrt(B^2 - 4AC)) / 2, r2 = q / A, r1 = C / q, which avoids
    subtracting nearly equal numbers when r1 << r2.
    """
    _require_allowed(abc)
    a, b, c = abc.a_coef, abc.b_coef, abc.c_coef
    if abc.is_degenerate:
        r = b / (2.0 * a)
        return r, r
    disc = max(b * b - 4.0 * a * c, 0.0)
    q = 0.5 * (b + math.sqrt(disc))
    return c / q, q / a


def closed_form(abc: AbcCoefficients) -> float:
    """pi (B / (2 sqrt A) - sqrt C); exactly 0 at the degenerate B."""
    _require_allowed(abc)
    if abc.is_degenerate:
        return 0.0
    return math.pi * (abc.b_coef / (2.0 * math.sqrt(abc.a_coef)) - math.sqrt(abc.c_coef))


def _check_tol(rel_tol: float) -> None:
    if not 1e-13 <= rel_tol <= 1e-3:
        raise DomainError(f"rel_tol must lie in [1e-13, 1e-3], got {rel_tol!r}")


def _cosine_map(abc: AbcCoefficients):
    r1, r2 = turning_points(abc)
    half = 0.5 * (r2 - r1)

    def radius(u):
        # r1 + h (1 - cos u), written to keep full precision near r1 when r1 << r2
        return r1 + 2.0 * half * np.sin(0.5 * u) ** 2

    return radius, half


def quadrature(abc: AbcCoefficients, rel_tol: float = 1e-12) -> float:
    """Numerical value of the action integral between the turning points.

    The raw integrand sqrt(-A + B/r - C/r^2) is evaluated on the cosine map
    and integrated over u with adaptive Gauss-Kronrod.

    Raises:
        NoTurningPointsError: if B < 2 sqrt(AC).
        QuadratureError: if the tolerance is not met within the panel budget.
    """
    _check_tol(rel_tol)
    _require_allowed(abc)
    if abc.is_degenerate:
        return 0.0
    radius, half = _cosine_map(abc)

    def integrand(u):
        r = radius(u)
        p2 = abc.momentum_squared(r)
        return np.sqrt(np.maximum(p2, 0.0)) * half * np.sin(u)

    sqrt_a = math.sqrt(abc.a_coef)

    def noise(u):
        # rounding in -A + B/r - C/r^2 is ~eps (A + B/r + C/r^2); through the
        # sqrt and the h sin(u) Jacobian it becomes ~eps (A r + B + C/r) / (2 sqrt A)
        r = radius(u)
        return (abc.a_coef * r + abs(abc.b_coef) + abc.c_coef / r) / (2.0 * sqrt_a)

    value, _ = _gauss_kronrod.integrate(integrand, 0.0, math.pi, rel_tol=rel_tol, noise=noise)
    return value


def inverse_root_integral(abc: AbcCoefficients, rel_tol: float = 1e-12) -> float:
    """int_{r1}^{r2} dr / sqrt(-A r^2 + B r - C), numerically; equals pi / sqrt(A)."""
    _check_tol(rel_tol)
    _require_allowed(abc)
    if abc.is_degenerate:
        return math.pi / math.sqrt(abc.a_coef)
    radius, half = _cosine_map(abc)

    def integrand(u):
        r = radius(u)
        q = -abc.a_coef * r * r + abc.b_coef * r - abc.c_coef
        s = np.sin(u)
        out = np.empty_like(u)
        inside = q > 0
        out[inside] = half * s[inside] / np.sqrt(q[inside])
        # at u -> 0, pi the ratio tends to 1/sqrt(A)
        out[~inside] = 1.0 / math.sqrt(abc.a_coef)
        return out

    value, _ = _gauss_kronrod.integrate(integrand, 0.0, math.pi, rel_tol=rel_tol)
    return value


def eccentricity_closed_form(epsilon: float) -> float:
    """(1 - eps^2)^(-1/2) - 1."""
    return 1.0 / math.sqrt(1.0 - epsilon * epsilon) - 1.0


def eccentricity_integral(epsilon: float, rel_tol: float = 1e-13,
                          max_points: int = 2**16) -> tuple[float, float]:
    """Mean of eps^2 sin^2 phi / (1 + eps cos phi)^2 over one period, and its closed form.

    Equal-spaced trapezoidal sums converge geometrically for this smooth
    periodic integrand; the point count doubles until two successive sums
    agree within rel_tol / 4.

    Returns:
        (numeric, closed_form)
    """
    if not 0.0 <= epsilon < 1.0:
        raise DomainError(f"eccentricity must lie in [0, 1), got {epsilon!r}")
    closed = eccentricity_closed_form(epsilon)
    if epsilon == 0.0:
        return 0.0, closed

    def mean_value(n: int) -> float:
        phi = 2.0 * math.pi * np.arange(n) / n
        f = (epsilon * np.sin(phi)) ** 2 / (1.0 + epsilon * np.cos(phi)) ** 2
        return math.fsum(f.tolist()) / n

    n = 16
    previous = mean_value(n)
    while n < max_points:
        n *= 2
        current = mean_value(n)
        if abs(current - previous) <= 0.25 * rel_tol * abs(current):
            return current, closed
        previous = current
    return previous, closed


def derivative_identity(abc: AbcCoefficients, db: float,
                        rel_tol: float = 1e-13) -> tuple[float, float]:
    """Central difference of the quadrature in B against pi / (2 sqrt A).

    Returns:
        (finite_difference, analytic)

    Raises:
        DomainError: if B - db leaves the classically allowed region.
    """
    if not db > 0:
        raise DomainError(f"step must be positive, got {db!r}")
    if not abc.b_coef - db > degenerate_b(abc.a_coef, abc.c_coef):
        raise DomainError(
            f"step db={db!r} too large: B - db falls below 2 sqrt(AC)"
        )
    up = AbcCoefficients(abc.a_coef, abc.b_coef + db, abc.c_coef)
    down = AbcCoefficients(abc.a_coef, abc.b_coef - db, abc.c_coef)
    fd = (quadrature(up, rel_tol) - quadrature(down, rel_tol)) / (2.0 * db)
    return fd, math.pi / (2.0 * math.sqrt(abc.a_coef))
