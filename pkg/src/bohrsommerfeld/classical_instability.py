"""Radiative collapse of a classical electron on a hydrogen orbit.

The electron is treated as moving on a slowly shrinking circle, losing
energy at the Larmor rate. The radius then obeys

    dr/dt = -K / (3 r^2),    K = 4 e^4 / (m^2 c^3),

whose exact solution is the cube law r^3 = r_start^3 - K t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .constants import PhysicalConstants
from .errors import DomainError

__all__ = [
    "SpiralTrajectory",
    "larmor_power",
    "collapse_constant",
    "radial_speed",
    "spiral_time",
    "circular_speed",
    "revolution_time",
    "total_rotations",
    "cube_law_radius",
    "integrate_spiral",
]


@dataclass(frozen=True)
class SpiralTrajectory:
    """Sampled in-spiral from r_start down to the cutoff radius.

    ``integrated_rotations`` counts revolutions along the shrinking orbit,
    the integral of dt / t_rot(r(t)) from r_start to the nucleus.
    """

    t: np.ndarray
    r: np.ndarray
    r_start: float
    cutoff_radius: float
    collapse_time: float
    integrated_rotations: float


def _positive(name: str, value: float) -> None:
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def larmor_power(acceleration, k: PhysicalConstants):
    """Radiated power 2 e^2 a^2 / (3 c^3) in erg/s."""
    a = np.asarray(acceleration, dtype=float)
    if not np.all(np.isfinite(a)):
        raise DomainError("acceleration must be finite")
    power = 2.0 * k.electron_charge**2 * a**2 / (3.0 * k.speed_of_light**3)
    return float(power) if power.ndim == 0 else power


def collapse_constant(k: PhysicalConstants) -> float:
    """K = 4 e^4 / (m^2 c^3), so that r^3 decreases at the rate K."""
    return 4.0 * k.electron_charge**4 / (k.electron_mass**2 * k.speed_of_light**3)


def radial_speed(r, k: PhysicalConstants):
    """dr/dt = -K / (3 r^2)."""
    return -collapse_constant(k) / (3.0 * np.asarray(r, dtype=float) ** 2)


def spiral_time(r_start: float, k: PhysicalConstants) -> float:
    """Time to fall from r_start to the nucleus, m^2 c^3 r_start^3 / (4 e^4)."""
    _positive("r_start", r_start)
    return r_start**3 / collapse_constant(k)


def circular_speed(r: float, k: PhysicalConstants) -> float:
    """e / sqrt(m r), the speed on a circle of radius r around a proton."""
    _positive("r", r)
    return k.electron_charge / math.sqrt(k.electron_mass * r)


def revolution_time(r: float, k: PhysicalConstants) -> float:
    return 2.0 * math.pi * r / circular_speed(r, k)


def total_rotations(r_start: float, k: PhysicalConstants) -> float:
    """Fall time divided by the revolution time of the starting orbit."""
    return spiral_time(r_start, k) / revolution_time(r_start, k)


def cube_law_radius(t, r_start: float, k: PhysicalConstants):
    """(r_start^3 - K t)^(1/3); zero once the electron has reached the nucleus."""
    _positive("r_start", r_start)
    cube = r_start**3 - collapse_constant(k) * np.asarray(t, dtype=float)
    return np.cbrt(np.maximum(cube, 0.0))


def integrate_spiral(r_start: float, k: PhysicalConstants, rtol: float = 1e-12,
                     points: int = 1000, cutoff_fraction: float = 1e-3) -> SpiralTrajectory:
    """Integrate the radial decay numerically down to cutoff_fraction * r_start.

    The ODE is solved in the scaled variables rho = r / r_start and
    s = t / tau, where it reads d rho/ds = -1 / (3 rho^2). The rotation count
    is integrated alongside. Below the cutoff the cube law finishes the
    fall analytically: the collapse time is t_cut + r_cut^3 / K and the
    remaining rotations are 2 N rho_cut^(3/2).

    Args:
        r_start: initial radius in cm.
        k: physical constants.
        rtol: relative tolerance passed to the integrator.
        points: number of samples, uniform in t between 0 and the cutoff time.
        cutoff_fraction: stop radius as a fraction of r_start.

    Raises:
        DomainError: for nonpositive inputs or a cutoff outside (0, 1).
        RuntimeError: if the integrator fails before the cutoff.
    """
    _positive("r_start", r_start)
    if not 0.0 < cutoff_fraction < 1.0:
        raise DomainError(f"cutoff_fraction must lie in (0, 1), got {cutoff_fraction!r}")
    if int(points) != points or points < 2:
        raise DomainError(f"points must be an integer >= 2, got {points!r}")
    if not 0.0 < rtol < 1e-2:
        raise DomainError(f"rtol must lie in (0, 1e-2), got {rtol!r}")

    tau = spiral_time(r_start, k)
    n_initial = total_rotations(r_start, k)

    def rhs(_s, y):
        rho = y[0]
        return [-1.0 / (3.0 * rho * rho), n_initial * rho**-1.5]

    def reach_cutoff(_s, y):
        return y[0] - cutoff_fraction

    reach_cutoff.terminal = True
    reach_cutoff.direction = -1

    sol = solve_ivp(rhs, (0.0, 1.0), [1.0, 0.0], method="DOP853", rtol=rtol,
                    atol=[rtol * cutoff_fraction, rtol * n_initial], events=reach_cutoff,
                    dense_output=True)
    if sol.status != 1 or not sol.t_events[0].size:
        raise RuntimeError(f"spiral integration stopped before the cutoff: {sol.message}")
    s_cut = float(sol.t_events[0][0])
    rho_cut, rotations_cut = (float(v) for v in sol.y_events[0][0])

    s = np.linspace(0.0, s_cut, int(points))
    rho = sol.sol(s)[0]
    rho[0], rho[-1] = 1.0, rho_cut
    collapse = (s_cut + rho_cut**3) * tau
    rotations = rotations_cut + 2.0 * n_initial * rho_cut**1.5
    return SpiralTrajectory(
        t=s * tau,
        r=rho * r_start,
        r_start=r_start,
        cutoff_radius=rho_cut * r_start,
        collapse_time=collapse,
        integrated_rotations=rotations,
    )
