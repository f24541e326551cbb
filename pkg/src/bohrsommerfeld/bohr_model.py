"""Circular Bohr orbits of hydrogen-like ions and uniform circular kinematics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import EnergyLevel, PhysicalConstants
from .errors import DomainError

__all__ = [
    "BohrState",
    "CircularSample",
    "Transition",
    "orbit_radius",
    "energy_level",
    "virial_radius_energy_check",
    "transition",
    "orbital_speed",
    "orbital_momentum",
    "circular_trajectory",
]


@dataclass(frozen=True)
class BohrState:
    """Nuclear charge number ``z`` (positive real) and principal number ``n``."""

    z: float
    n: int

    def __post_init__(self) -> None:
        if not self.z > 0:
            raise DomainError(f"nuclear charge z must be positive, got {self.z!r}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"principal quantum number must be an integer >= 1, got {self.n!r}")


@dataclass(frozen=True)
class CircularSample:
    time: float
    position: np.ndarray
    velocity: np.ndarray
    acceleration: np.ndarray


@dataclass(frozen=True)
class Transition:
    """Photon exchanged between two levels.

    ``photon_energy`` is E_initial - E_final: positive for emission,
    negative for absorption. Wavelengths are always positive.
    """

    photon_energy: float
    direction: str
    wavelength_cm: float

    @property
    def wavelength_nm(self) -> float:
        return self.wavelength_cm * 1e7


def orbit_radius(s: BohrState, k: PhysicalConstants) -> float:
    """Radius hbar^2 n^2 / (m Z e^2) of the n-th orbit, in cm."""
    return k.hbar**2 * s.n**2 / (k.electron_mass * s.z * k.electron_charge**2)


def energy_level(s: BohrState, k: PhysicalConstants) -> EnergyLevel:
    """Level energy -m Z^2 e^4 / (2 hbar^2 n^2) in erg."""
    value = -k.electron_mass * s.z**2 * k.electron_charge**4 / (2.0 * k.hbar**2 * s.n**2)
    return EnergyLevel(value, "erg")


def virial_radius_energy_check(s: BohrState, k: PhysicalConstants) -> float:
    """E_n + Z e^2 / (2 r_n); zero when the level obeys the virial theorem."""
    return energy_level(s, k).value + s.z * k.electron_charge**2 / (2.0 * orbit_radius(s, k))


def orbital_speed(s: BohrState, k: PhysicalConstants) -> float:
    """Speed Z e^2 / (hbar n) on the n-th orbit, in cm/s."""
    return s.z * k.electron_charge**2 / (k.hbar * s.n)


def orbital_momentum(s: BohrState, k: PhysicalConstants) -> float:
    return k.electron_mass * orbital_speed(s, k)


def transition(initial: BohrState, final: BohrState, k: PhysicalConstants) -> Transition:
    """Photon energy and wavelength for a jump between two levels of one ion.

    Raises:
        DomainError: if the ions differ or the levels coincide.
    """
    if initial.z != final.z:
        raise DomainError(f"transition requires the same nucleus, got Z={initial.z} and Z={final.z}")
    if initial.n == final.n:
        raise DomainError(f"n_initial == n_final == {initial.n}: no photon is exchanged")
    delta = energy_level(initial, k).value - energy_level(final, k).value
    direction = "emission" if delta > 0 else "absorption"
    wavelength = 2.0 * math.pi * k.hbar * k.speed_of_light / abs(delta)
    return Transition(photon_energy=delta, direction=direction, wavelength_cm=wavelength)


def circular_trajectory(radius: float, angular_speed: float, times) -> list[CircularSample]:
    """Samples of uniform circular motion r(t) = r (cos wt, sin wt)."""
    if not radius > 0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    samples = []
    for t in np.atleast_1d(np.asarray(times, dtype=float)):
        c, s = math.cos(angular_speed * t), math.sin(angular_speed * t)
        position = radius * np.array([c, s])
        velocity = radius * angular_speed * np.array([-s, c])
        acceleration = -(angular_speed**2) * position
        samples.append(CircularSample(float(t), position, velocity, acceleration))
    return samples
