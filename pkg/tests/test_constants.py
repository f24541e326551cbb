import math

import pytest

from bohrsommerfeld.constants import (
    ERG_PER_EV,
    EnergyLevel,
    PhysicalConstants,
    convert,
    default_constants,
    with_alpha,
)
from bohrsommerfeld.errors import DomainError


def test_default_values(k):
    assert k.electron_mass == 9.1094e-28
    assert k.electron_charge == 4.8032e-10
    assert k.hbar == 1.0546e-27
    assert k.speed_of_light == 2.9979e10


def test_alpha_close_to_one_over_137(k):
    # 40-digit evaluation of e^2 / (hbar c) with the default inputs
    assert k.alpha == pytest.approx(0.007297203067116954685777990101636794659479, rel=1e-15)
    assert 1.0 / k.alpha == pytest.approx(137.0388, abs=1e-4)


def test_bohr_radius(k):
    assert k.a0 == pytest.approx(5.292055865988460687171252301775742973433e-9, rel=1e-15)


def test_atomic_energy_unit_is_alpha_squared_mc2(k):
    assert k.e0 == pytest.approx(k.alpha**2 * k.mc2, rel=1e-14)


@pytest.mark.parametrize("field", ["electron_mass", "electron_charge", "hbar", "speed_of_light"])
@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_rejects_nonpositive_or_nonfinite(field, bad):
    values = dict(electron_mass=1.0, electron_charge=1.0, hbar=1.0, speed_of_light=1.0)
    values[field] = bad
    with pytest.raises(DomainError):
        PhysicalConstants(**values)


def test_with_alpha_sets_coupling(k):
    exact = with_alpha(k, 1 / 137.035999)
    assert exact.alpha == pytest.approx(1 / 137.035999, rel=1e-15)
    assert exact.electron_mass == k.electron_mass
    with pytest.raises(DomainError):
        with_alpha(k, 0.0)


def test_conversion_round_trip(k):
    level = EnergyLevel(-2.0e-11, "erg")
    for unit in ("eV", "ratio_mc2", "ratio_E0"):
        back = convert(convert(level, unit, k), "erg", k)
        assert back.value == pytest.approx(level.value, rel=1e-15)


def test_ev_conversion(k):
    assert EnergyLevel(ERG_PER_EV, "erg").to("eV", k).value == pytest.approx(1.0, rel=1e-15)
    assert EnergyLevel(1.0, "ratio_mc2").to("eV", k).value == pytest.approx(510991.4849, rel=1e-9)


def test_unknown_unit():
    with pytest.raises(DomainError):
        EnergyLevel(1.0, "kcal")


def test_default_constants_are_independent_values():
    assert default_constants() == default_constants()
    assert math.isfinite(default_constants().mc2)
