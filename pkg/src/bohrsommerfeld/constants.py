"""Physical constants in cgs units and energy unit conversion.

Every computation in the package takes a :class:`PhysicalConstants` value
explicitly, so alternative constant sets (exact alpha, synthetic values for
scaling tests) never leak through global state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError

__all__ = [
    "ERG_PER_EV",
    "ENERGY_UNITS",
    "PhysicalConstants",
    "EnergyLevel",
    "default_constants",
    "fine_structure_constant",
    "bohr_radius",
    "atomic_energy_unit",
    "rest_energy",
    "with_alpha",
    "convert",
]

# Exact since the 2019 SI redefinition.
ERG_PER_EV = 1.602176634e-12

ENERGY_UNITS = ("erg", "eV", "ratio_mc2", "ratio_E0")


@dataclass(frozen=True)
class PhysicalConstants:
    """Electron mass (g), charge magnitude (statC), hbar (erg s), c (cm/s)."""

    electron_mass: float
    electron_charge: float
    hbar: float
    speed_of_light: float

    def __post_init__(self) -> None:
        for name in ("electron_mass", "electron_charge", "hbar", "speed_of_light"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")

    @property
    def alpha(self) -> float:
        return fine_structure_constant(self)

    @property
    def a0(self) -> float:
        return bohr_radius(self)

    @property
    def e0(self) -> float:
        return atomic_energy_unit(self)

    @property
    def mc2(self) -> float:
        return rest_energy(self)


@dataclass(frozen=True)
class EnergyLevel:
    """An energy value tagged with its unit (one of ``ENERGY_UNITS``)."""

    value: float
    unit: str

    def __post_init__(self) -> None:
        if self.unit not in ENERGY_UNITS:
            raise DomainError(f"unknown energy unit {self.unit!r}; expected one of {ENERGY_UNITS}")

    def to(self, unit: str, k: PhysicalConstants) -> EnergyLevel:
        return convert(self, unit, k)


def default_constants() -> PhysicalConstants:
    """The five-digit cgs values used for every worked number in this package."""
    return PhysicalConstants(
        electron_mass=9.1094e-28,
        electron_charge=4.8032e-10,
        hbar=1.0546e-27,
        speed_of_light=2.9979e10,
    )


def fine_structure_constant(k: PhysicalConstants) -> float:
    """Return alpha = e^2 / (hbar c)."""
    return k.electron_charge**2 / (k.hbar * k.speed_of_light)


def bohr_radius(k: PhysicalConstants) -> float:
    """Return a0 = hbar^2 / (m e^2) in cm."""
    return k.hbar**2 / (k.electron_mass * k.electron_charge**2)


def atomic_energy_unit(k: PhysicalConstants) -> float:
    """Return E0 = e^2 / a0 in erg (twice the hydrogen ionization energy)."""
    return k.electron_charge**2 / bohr_radius(k)


def rest_energy(k: PhysicalConstants) -> float:
    """Return m c^2 in erg."""
    return k.electron_mass * k.speed_of_light**2


def with_alpha(k: PhysicalConstants, alpha: float) -> PhysicalConstants:
    """Rescale the electron charge so that e^2/(hbar c) equals ``alpha``.

    m, hbar and c are kept, so a0, E0 and every charge-dependent quantity
    move consistently with the new coupling.
    """
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return replace(k, electron_charge=math.sqrt(alpha * k.hbar * k.speed_of_light))


def _erg_per_unit(unit: str, k: PhysicalConstants) -> float:
    if unit == "erg":
        return 1.0
    if unit == "eV":
        return ERG_PER_EV
    if unit == "ratio_mc2":
        return rest_energy(k)
    if unit == "ratio_E0":
        return atomic_energy_unit(k)
    raise DomainError(f"unknown energy unit {unit!r}; expected one of {ENERGY_UNITS}")


def convert(level: EnergyLevel, target_unit: str, k: PhysicalConstants) -> EnergyLevel:
    """Express ``level`` in ``target_unit``.

    The conversion is a pure rescaling: ratio units divide by m c^2 or E0
    without shifting the zero of energy.
    """
    if target_unit == level.unit:
        return EnergyLevel(level.value, level.unit)
    scale = _erg_per_unit(level.unit, k) / _erg_per_unit(target_unit, k)
    return EnergyLevel(level.value * scale, target_unit)
