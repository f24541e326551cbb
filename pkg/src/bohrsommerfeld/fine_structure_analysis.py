"""Small-coupling expansions of the relativistic Coulomb levels and fine-structure spreads.

Coefficients of mu^(2k) are kept as exact fractions. Remainders are measured
with mpmath, since the error after the mu^8 term is near 1e-22 at physical
coupling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import PhysicalConstants
from .errors import DomainError, SupercriticalCouplingError
from .relativistic_kepler import (
    energy_series_coefficients,
    exact_orbit_parameters,
    orbit_series_coefficients,
    sommerfeld_energy_ratio,
)
from .series import HIGH_PRECISION_DPS, partial_sums, remainder_slope, sqrt

__all__ = [
    "ExpansionReport",
    "ComparisonRow",
    "rel_schrodinger_coefficients",
    "dirac_coefficients",
    "rel_schrodinger_exact",
    "dirac_exact",
    "expand_rel_schrodinger",
    "expand_dirac",
    "splitting_ratio",
    "splitting_ratio_from_brackets",
    "binomial_sqrt_coefficients",
    "kepler_remainder_slopes",
    "comparison_table",
]

_SWEEP_HALVINGS = 3


@dataclass(frozen=True)
class ExpansionReport:
    """Exact level, its partial sums at mu^0, mu^2, ..., and the fitted remainder order.

    ``remainder_order_estimate`` is the log-log slope of exact minus the last
    partial sum over mu, mu/2, mu/4, mu/8. ``remainder_slopes`` holds the same
    fit after every partial sum.
    """

    model: str
    n: int
    angular: Fraction
    mu: float
    exact: float
    partial_sums: list[float]
    remainder_order_estimate: float
    remainder_slopes: list[float] = field(default_factory=list)

    @property
    def coefficients(self) -> list[Fraction]:
        if self.model == "dirac":
            return dirac_coefficients(self.n, self.angular)[: len(self.partial_sums)]
        return rel_schrodinger_coefficients(self.n, self.angular)[: len(self.partial_sums)]


def rel_schrodinger_coefficients(n: int, l) -> list[Fraction]:
    """Coefficients of mu^0, mu^2, mu^4 for the relativistic Schroedinger level."""
    n = Fraction(n)
    s = Fraction(l) + Fraction(1, 2)
    return [Fraction(1), -1 / (2 * n**2), -(n / s - Fraction(3, 4)) / (2 * n**4)]


def dirac_coefficients(n: int, j) -> list[Fraction]:
    """Coefficients of mu^0 through mu^8 for the Dirac level, written in t = n / (j + 1/2)."""
    n = Fraction(n)
    t = n / (Fraction(j) + Fraction(1, 2))
    c6 = -(Fraction(5, 4) - 3 * t + Fraction(3, 2) * t**2 + t**3 / 2) / (4 * n**6)
    c8 = (Fraction(35, 8) - 15 * t + 15 * t**2 - t**3 - 3 * t**4 - t**5) / (16 * n**8)
    return [Fraction(1), -1 / (2 * n**2), -(t - Fraction(3, 4)) / (2 * n**4), c6, c8]


def binomial_sqrt_coefficients(terms: int = 5) -> list[Fraction]:
    """Coefficients of mu^(2k) in sqrt(1 - mu^2)."""
    out = []
    c = Fraction(1)
    for k in range(terms):
        out.append(c)
        # binom(1/2, k+1) (-1)^(k+1) from binom(1/2, k) (-1)^k
        c = -c * (Fraction(1, 2) - k) / (k + 1)
    return out


def _check_rel_schrodinger(n: int, l) -> int:
    if int(l) != l or l < 0:
        raise DomainError(f"l must be an integer >= 0, got {l!r}")
    if int(n) != n or n < l + 1:
        raise DomainError(f"n must be an integer >= l + 1 = {int(l) + 1}, got {n!r}")
    return int(n - l - 1)


def _check_dirac(n: int, j) -> int:
    twice = Fraction(j) * 2
    if twice.denominator != 1 or twice.numerator % 2 != 1 or twice < 1:
        raise DomainError(f"j must be a half-integer >= 1/2, got {j!r}")
    n_r = Fraction(n) - Fraction(j) - Fraction(1, 2)
    if int(n) != n or n_r < 0:
        raise DomainError(f"n must be an integer >= j + 1/2 = {Fraction(j) + Fraction(1, 2)}, got {n!r}")
    return int(n_r)


def rel_schrodinger_exact(n: int, l, mu):
    """[1 + mu^2 / (n_r + 1/2 + sqrt((l+1/2)^2 - mu^2))^2]^(-1/2); float or mpmath."""
    n_r = _check_rel_schrodinger(n, l)
    half = (mu * 0 + 1) / 2  # 0.5 as a float or an mpf
    s = int(l) + half
    if not mu < s:
        raise SupercriticalCouplingError(f"mu = {float(mu):.6g} >= l + 1/2 = {float(s)}")
    big_n = n_r + half + sqrt(s * s - mu * mu)
    return 1 / sqrt(1 + mu * mu / (big_n * big_n))


def dirac_exact(n: int, j, mu):
    """[1 + mu^2 / (n_r + sqrt((j+1/2)^2 - mu^2))^2]^(-1/2); float or mpmath."""
    n_r = _check_dirac(n, j)
    s = (mu * 0 + 1) * int(Fraction(j) + Fraction(1, 2))
    if not mu < s:
        raise SupercriticalCouplingError(f"mu = {float(mu):.6g} >= j + 1/2 = {float(s)}")
    big_n = n_r + sqrt(s * s - mu * mu)
    return 1 / sqrt(1 + mu * mu / (big_n * big_n))


def _check_orders(orders: int, limit: int) -> int:
    if int(orders) != orders or orders < 0 or orders % 2 or orders > limit:
        raise DomainError(f"orders must be an even integer in [0, {limit}], got {orders!r}")
    return int(orders) // 2 + 1


def _report(model: str, n: int, angular, mu: float, coefficients, exact_fn) -> ExpansionReport:
    if not mu > 0:
        raise DomainError(f"mu must be positive for a remainder fit, got {mu!r}")
    exact = float(exact_fn(mu))
    sums = [float(v) for v in partial_sums(coefficients, mu)]
    slopes = []
    for m in range(1, len(coefficients) + 1):
        slopes.append(remainder_slope(exact_fn, lambda x, m=m: partial_sums(coefficients[:m], x)[-1],
                                      mu, halvings=_SWEEP_HALVINGS, dps=HIGH_PRECISION_DPS))
    return ExpansionReport(model, n, Fraction(angular), mu, exact, sums, slopes[-1], slopes)


def expand_rel_schrodinger(n: int, l: int, mu: float, orders: int = 4) -> ExpansionReport:
    """Partial sums of the small-mu expansion of the relativistic Schroedinger level."""
    terms = _check_orders(orders, 4)
    rel_schrodinger_exact(n, l, mu)  # validates n, l and coupling
    coefficients = rel_schrodinger_coefficients(n, l)[:terms]
    return _report("rel_schrodinger", n, l, mu, coefficients, lambda x: rel_schrodinger_exact(n, l, x))


def expand_dirac(n: int, j, mu: float, orders: int = 8) -> ExpansionReport:
    """Partial sums through mu^8 of the small-mu expansion of the Dirac level."""
    terms = _check_orders(orders, 8)
    dirac_exact(n, j, mu)
    coefficients = dirac_coefficients(n, j)[:terms]
    return _report("dirac", n, j, mu, coefficients, lambda x: dirac_exact(n, j, x))


def _check_split_n(n: int) -> int:
    if int(n) != n or n < 2:
        raise DomainError(f"a fine-structure spread needs n >= 2, got {n!r}")
    return int(n)


def splitting_ratio(n: int) -> Fraction:
    """4n / (2n - 1), the Schroedinger-to-Dirac ratio of the widest fine-structure spread."""
    n = _check_split_n(n)
    return Fraction(4 * n, 2 * n - 1)


def splitting_ratio_from_brackets(n: int) -> Fraction:
    """Same ratio from the mu^4 coefficients at l = 0, n - 1 and j = 1/2, n - 1/2."""
    n = _check_split_n(n)
    schrodinger = rel_schrodinger_coefficients(n, n - 1)[2] - rel_schrodinger_coefficients(n, 0)[2]
    dirac = dirac_coefficients(n, Fraction(2 * n - 1, 2))[2] - dirac_coefficients(n, Fraction(1, 2))[2]
    return schrodinger / dirac


def kepler_remainder_slopes(n_r: int, n_theta: int, coupling: float) -> dict[str, float]:
    """Remainder orders of the truncated orbit-parameter and energy series.

    The eccentricity entry is omitted for n_r = 0, where the series vanishes
    identically.
    """
    out = {}
    names = ["omega", "eccentricity", "semi_major"]
    for index, name in enumerate(names):
        if name == "eccentricity" and n_r == 0:
            continue
        out[name] = remainder_slope(
            lambda x, i=index: exact_orbit_parameters(n_r, n_theta, x)[i],
            lambda x, nm=name: partial_sums(orbit_series_coefficients(n_r, n_theta, like=x)[nm], x)[-1],
            coupling, halvings=_SWEEP_HALVINGS,
        )
    out["energy"] = remainder_slope(
        lambda x: sommerfeld_energy_ratio(n_r, n_theta, x),
        lambda x: partial_sums(energy_series_coefficients(n_r, n_theta), x)[-1],
        coupling, halvings=_SWEEP_HALVINGS,
    )
    return out


@dataclass(frozen=True)
class ComparisonRow:
    """Energies (E/mc^2) of one (n, j) level under each model; l = j - 1/2."""

    n: int
    n_r: int
    l: int
    j: Fraction
    n_theta: int
    old_sommerfeld: float
    dirac: float
    rel_schrodinger: float
    dirac_series_mu4: float
    rel_schrodinger_series_mu4: float


def comparison_table(z: float, n_max: int, k: PhysicalConstants) -> list[ComparisonRow]:
    """One row per (n, j) with n <= n_max; n_theta = j + 1/2 and l = j - 1/2.

    All three models then share n_r = n - n_theta.
    """
    if int(n_max) != n_max or n_max < 0:
        raise DomainError(f"n_max must be an integer >= 0, got {n_max!r}")
    mu = z * k.alpha
    rows = []
    for n in range(1, int(n_max) + 1):
        for n_theta in range(1, n + 1):
            j = Fraction(2 * n_theta - 1, 2)
            l = n_theta - 1
            rows.append(ComparisonRow(
                n=n,
                n_r=n - n_theta,
                l=l,
                j=j,
                n_theta=n_theta,
                old_sommerfeld=sommerfeld_energy_ratio(n - n_theta, n_theta, mu),
                dirac=dirac_exact(n, j, mu),
                rel_schrodinger=rel_schrodinger_exact(n, l, mu),
                dirac_series_mu4=partial_sums(dirac_coefficients(n, j)[:3], mu)[-1],
                rel_schrodinger_series_mu4=partial_sums(rel_schrodinger_coefficients(n, l), mu)[-1],
            ))
    return rows
