"""Relativistic Kepler ellipses and the old fine-structure formula.

Orbit lengths are kept dimensionless in units of a0/Z; ``to_cm`` converts
for display. All formulas are written in the coupling x = alpha Z and the
auxiliary root gamma = sqrt(n_theta^2 - x^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .constants import EnergyLevel, PhysicalConstants
from .errors import DomainError, SupercriticalCouplingError
from .series import partial_sums, sqrt

__all__ = [
    "OrbitGeometry",
    "SommerfeldQuantumNumbers",
    "OrbitSeries",
    "orbit_shape_from_dynamics",
    "quantized_orbit",
    "old_fine_structure_energy",
    "sommerfeld_energy_ratio",
    "sample_orbit",
    "default_theta_grid",
    "perihelion_shift",
    "energy_equation_coefficients",
    "energy_equation_residual",
    "orbit_series_coefficients",
    "energy_series_coefficients",
    "exact_orbit_parameters",
    "nonrel_expansion_orbit",
    "old_energy_expansion",
]


@dataclass(frozen=True)
class OrbitGeometry:
    semi_major: float
    eccentricity: float
    omega: float
    unit: str = "a0_over_z"

    def __post_init__(self) -> None:
        if not self.semi_major > 0:
            raise DomainError(f"semi-major axis must be positive, got {self.semi_major!r}")
        if not 0.0 <= self.eccentricity < 1.0:
            raise DomainError(f"eccentricity must lie in [0, 1), got {self.eccentricity!r}")
        if not 0.0 < self.omega <= 1.0:
            raise DomainError(f"omega must lie in (0, 1], got {self.omega!r}")
        if self.unit not in ("a0_over_z", "cm"):
            raise DomainError(f"unknown length unit {self.unit!r}")

    @property
    def r_min(self) -> float:
        return self.semi_major * (1.0 - self.eccentricity)

    @property
    def r_max(self) -> float:
        return self.semi_major * (1.0 + self.eccentricity)

    @property
    def semi_latus_rectum(self) -> float:
        return self.semi_major * (1.0 - self.eccentricity**2)

    def to_cm(self, z: float, k: PhysicalConstants) -> OrbitGeometry:
        if self.unit == "cm":
            return self
        return OrbitGeometry(self.semi_major * k.a0 / z, self.eccentricity, self.omega, "cm")


@dataclass(frozen=True)
class SommerfeldQuantumNumbers:
    n_r: int
    n_theta: int

    def __post_init__(self) -> None:
        if int(self.n_r) != self.n_r or self.n_r < 0:
            raise DomainError(f"n_r must be an integer >= 0, got {self.n_r!r}")
        if int(self.n_theta) != self.n_theta or self.n_theta < 1:
            raise DomainError(f"n_theta must be an integer >= 1, got {self.n_theta!r}")


@dataclass(frozen=True)
class OrbitSeries:
    """Small-coupling values of omega, eccentricity and Z a / a0 through (alpha Z)^4."""

    omega: float
    eccentricity: float
    semi_major: float


def _gamma(n_theta, coupling):
    if not coupling < n_theta:
        raise SupercriticalCouplingError(
            f"alpha Z = {float(coupling):.6g} >= n_theta = {n_theta}: sqrt(n_theta^2 - alpha^2 Z^2) is not real"
        )
    return sqrt(n_theta * n_theta - coupling * coupling)


def exact_orbit_parameters(n_r: int, n_theta: int, coupling) -> tuple:
    """(omega, eccentricity, Z a / a0) of the quantized ellipse at coupling alpha Z.

    Works for floats and mpmath numbers alike.
    """
    g = _gamma(n_theta, coupling)
    n_r = coupling * 0 + n_r  # match the number type of the coupling
    omega = g / n_theta
    eccentricity = sqrt(n_r) * sqrt(n_r + 2 * g) / (n_r + g)
    semi_major = (n_r + g) * sqrt(coupling * coupling + (n_r + g) ** 2)
    return omega, eccentricity, semi_major


def sommerfeld_energy_ratio(n_r: int, n_theta: int, coupling):
    """E/mc^2 = [1 + x^2 / (n_r + sqrt(n_theta^2 - x^2))^2]^(-1/2), x = alpha Z."""
    g = _gamma(n_theta, coupling)
    return 1 / sqrt(1 + coupling * coupling / (n_r + g) ** 2)


def orbit_shape_from_dynamics(energy_ratio: float, angular_momentum: float, z: float,
                              k: PhysicalConstants) -> tuple[float, float]:
    """omega and D of the orbit 1/r = C1 cos(omega theta) + D for given E/mc^2 and p_theta.

    Returns:
        (omega, D) with D in 1/cm.

    Raises:
        DomainError: if p_theta <= Z e^2 / c (no bounded rosette).
    """
    e2 = k.electron_charge**2
    c = k.speed_of_light
    critical = z * e2 / c
    if not angular_momentum > critical:
        raise DomainError(
            f"p_theta = {angular_momentum:.6g} <= Z e^2 / c = {critical:.6g}: omega^2 <= 0, orbit collapses"
        )
    omega_sq = 1.0 - (critical / angular_momentum) ** 2
    energy = energy_ratio * k.mc2
    d_param = z * e2 * energy / (omega_sq * c**2 * angular_momentum**2)
    return math.sqrt(omega_sq), d_param


def quantized_orbit(q: SommerfeldQuantumNumbers, z: float, k: PhysicalConstants) -> OrbitGeometry:
    """Ellipse selected by the radial and azimuthal quantum conditions (a in a0/Z)."""
    omega, eccentricity, semi_major = exact_orbit_parameters(q.n_r, q.n_theta, k.alpha * z)
    return OrbitGeometry(semi_major, eccentricity, omega)


def old_fine_structure_energy(q: SommerfeldQuantumNumbers, z: float, k: PhysicalConstants) -> EnergyLevel:
    return EnergyLevel(sommerfeld_energy_ratio(q.n_r, q.n_theta, k.alpha * z), "ratio_mc2")


def sample_orbit(g: OrbitGeometry, theta_grid) -> np.ndarray:
    """Rows (theta, r, x, y) on the orbit 1/r = (1 + e cos(omega theta)) / (a (1 - e^2))."""
    theta = np.asarray(theta_grid, dtype=float)
    if not np.all(np.isfinite(theta)):
        raise DomainError("theta grid must be finite")
    r = g.semi_latus_rectum / (1.0 + g.eccentricity * np.cos(g.omega * theta))
    return np.column_stack([theta, r, r * np.cos(theta), r * np.sin(theta)])


def default_theta_grid(g: OrbitGeometry, points: int = 128) -> np.ndarray:
    """Uniform grid over one radial period, [0, 2 pi / omega]."""
    if points < 2:
        raise DomainError(f"need at least 2 grid points, got {points}")
    return np.linspace(0.0, 2.0 * math.pi / g.omega, points)


def perihelion_shift(g: OrbitGeometry) -> float:
    """Advance of the perihelion per revolution, 2 pi / omega - 2 pi."""
    return 2.0 * math.pi / g.omega - 2.0 * math.pi


def energy_equation_coefficients(g: OrbitGeometry, q: SommerfeldQuantumNumbers, z: float,
                                 k: PhysicalConstants) -> tuple[float, float, float]:
    """Coefficients of the energy equation as a quadratic in u = a (1 - e^2) / r.

    The orbit equation turns (E/mc^2 + Z e^2 s / mc^2)^2 - 1
    - (p_theta / mc)^2 [(ds/dtheta)^2 + s^2] into c2 u^2 + c1 u + c0 for
    s = u / (a (1 - e^2)). On a quantized orbit all three vanish.

    Returns:
        (c2, c1, c0)
    """
    gc = g.to_cm(z, k)
    p = gc.semi_latus_rectum
    energy = old_fine_structure_energy(q, z, k).value
    kappa = z * k.electron_charge**2 / (k.mc2 * p)
    lam_sq = (k.hbar * q.n_theta / (k.electron_mass * k.speed_of_light * p)) ** 2
    w2 = g.omega**2
    e2 = g.eccentricity**2
    c2 = kappa**2 - lam_sq * (1.0 - w2)
    c1 = 2.0 * energy * kappa - 2.0 * lam_sq * w2
    c0 = energy**2 - 1.0 + lam_sq * w2 * (1.0 - e2)
    return c2, c1, c0


def energy_equation_residual(g: OrbitGeometry, q: SommerfeldQuantumNumbers, z: float,
                             k: PhysicalConstants, theta):
    """Left minus right side of the relativistic energy equation along the orbit.

    Evaluated at s = 1/r(theta) with p_theta = hbar n_theta and the energy of
    the old fine-structure formula; dimensionless (energies in mc^2).
    """
    gc = g.to_cm(z, k)
    theta = np.asarray(theta, dtype=float)
    phase = g.omega * theta
    s = (1.0 + g.eccentricity * np.cos(phase)) / gc.semi_latus_rectum
    ds = -g.eccentricity * g.omega * np.sin(phase) / gc.semi_latus_rectum
    energy = old_fine_structure_energy(q, z, k).value
    lhs = (energy + z * k.electron_charge**2 * s / k.mc2) ** 2
    rhs = 1.0 + (k.hbar * q.n_theta / (k.electron_mass * k.speed_of_light)) ** 2 * (ds**2 + s**2)
    return lhs - rhs


def orbit_series_coefficients(n_r: int, n_theta: int, like=0.0) -> dict[str, list]:
    """Coefficients of (alpha Z)^0, ^2, ^4 for omega, eccentricity and Z a / a0.

    ``like`` selects the number type for the irrational eccentricity
    coefficients (pass an mpmath.mpf for high precision).
    """
    nr, nt = Fraction(n_r), Fraction(n_theta)
    s = nr + nt
    omega = [Fraction(1), -1 / (2 * nt**2), -1 / (8 * nt**4)]
    semi_major = [s**2, -(2 * nr + nt) / (2 * nt), -(2 * nr / nt**3 + 1 / s**2) / 8]
    one = like * 0 + 1
    root_nr = sqrt(one * n_r)
    root_m = sqrt(one * (n_r + 2 * n_theta))
    eccentricity = [
        root_nr * root_m / _num(s, one),
        root_nr / (_num(2 * s**2, one) * root_m),
        root_nr * _num(3 * nr + 5 * nt, one) / (_num(8 * nt * s**3, one) * root_m**3),
    ]
    return {"omega": omega, "eccentricity": eccentricity, "semi_major": semi_major}


def _num(frac: Fraction, one):
    return one * frac.numerator / frac.denominator


def energy_series_coefficients(n_r: int, n_theta: int) -> list[Fraction]:
    """Coefficients of (alpha Z)^0, ^2, ^4 in the small-coupling old energy formula."""
    nr, nt = Fraction(n_r), Fraction(n_theta)
    s = nr + nt
    return [Fraction(1), -1 / (2 * s**2), -(4 * nr + nt) / (8 * nt * s**4)]


def nonrel_expansion_orbit(q: SommerfeldQuantumNumbers, z: float, k: PhysicalConstants) -> OrbitSeries:
    x = k.alpha * z
    coeffs = orbit_series_coefficients(q.n_r, q.n_theta)
    return OrbitSeries(
        omega=partial_sums(coeffs["omega"], x)[-1],
        eccentricity=partial_sums(coeffs["eccentricity"], x)[-1],
        semi_major=partial_sums(coeffs["semi_major"], x)[-1],
    )


def old_energy_expansion(q: SommerfeldQuantumNumbers, z: float, k: PhysicalConstants) -> float:
    return partial_sums(energy_series_coefficients(q.n_r, q.n_theta), k.alpha * z)[-1]
