import math

import numpy as np
import pytest

from bohrsommerfeld.classical_instability import (
    circular_speed,
    collapse_constant,
    cube_law_radius,
    integrate_spiral,
    larmor_power,
    radial_speed,
    revolution_time,
    spiral_time,
    total_rotations,
)
from bohrsommerfeld.errors import DomainError

from conftest import matches_sig_digits


def test_larmor_scaling(k):
    assert larmor_power(0.0, k) == 0.0
    assert larmor_power(2e20, k) == pytest.approx(4 * larmor_power(1e20, k), rel=1e-15)
    assert np.allclose(larmor_power(np.array([1.0, 2.0]), k), [larmor_power(1.0, k), larmor_power(2.0, k)])
    with pytest.raises(DomainError):
        larmor_power(float("inf"), k)


def test_larmor_at_bohr_radius(k):
    r = k.a0
    a = k.electron_charge**2 / (k.electron_mass * r**2)
    e, c, m = k.electron_charge, k.speed_of_light, k.electron_mass
    assert larmor_power(a, k) == pytest.approx(2 * e**6 / (3 * c**3 * m**2 * r**4), rel=1e-14)
    assert larmor_power(a, k) == pytest.approx(0.4668357555274363558309687258817685526322, rel=1e-13)


def test_spiral_time(k):
    tau = spiral_time(k.a0, k)
    assert tau == pytest.approx(1.556401206325971932413985002381625892705e-11, rel=1e-13)
    assert matches_sig_digits(tau, 1.5564e-11, 4)
    assert spiral_time(0.5 * k.a0, k) == pytest.approx(tau / 8, rel=1e-15)
    assert spiral_time(2 * k.a0, k) == pytest.approx(8 * tau, rel=1e-15)
    with pytest.raises(DomainError):
        spiral_time(0.0, k)


def test_revolution_time(k):
    t = revolution_time(k.a0, k)
    assert t == pytest.approx(1.519954944273789537978309073391987245708e-16, rel=1e-13)
    assert revolution_time(4 * k.a0, k) == pytest.approx(8 * t, rel=1e-14)
    assert circular_speed(k.a0, k) == pytest.approx(218762850.7490991845249383652569694670965, rel=1e-14)


def test_total_rotations(k):
    n = total_rotations(k.a0, k)
    assert n == pytest.approx(102397.851475103812548313480257797632573, rel=1e-13)
    assert matches_sig_digits(n, 102400, 3)
    assert total_rotations(4 * k.a0, k) == pytest.approx(8 * n, rel=1e-14)


def test_cube_law(k):
    r0 = k.a0
    tau = spiral_time(r0, k)
    assert cube_law_radius(0.0, r0, k) == pytest.approx(r0, rel=1e-15)
    assert cube_law_radius(tau, r0, k) <= 1e-5 * r0
    assert cube_law_radius(2 * tau, r0, k) == 0.0


def test_integrated_trajectory_follows_cube_law(k):
    r0 = k.a0
    tr = integrate_spiral(r0, k, points=2000)
    assert tr.t[0] == 0.0 and tr.r[0] == r0
    exact = cube_law_radius(tr.t, r0, k)
    keep = tr.r >= 0.01 * r0
    assert np.max(np.abs(tr.r[keep] / exact[keep] - 1)) < 1e-8
    cube_residual = np.abs(tr.r**3 - (r0**3 - collapse_constant(k) * tr.t)) / r0**3
    assert np.max(cube_residual) < 1e-10
    assert tr.collapse_time == pytest.approx(spiral_time(r0, k), rel=1e-6)
    assert tr.cutoff_radius == pytest.approx(1e-3 * r0, rel=1e-6)


def test_integrated_rotation_count(k):
    tr = integrate_spiral(k.a0, k)
    # with the shrinking period the count is twice the estimate that uses the initial orbit
    assert tr.integrated_rotations == pytest.approx(2 * total_rotations(k.a0, k), rel=1e-8)


def test_energy_bookkeeping(k):
    tr = integrate_spiral(k.a0, k, points=200)
    r = tr.r
    e2 = k.electron_charge**2
    # d/dt (-e^2 / 2r) = e^2 / (2 r^2) dr/dt
    d_energy = e2 / (2 * r**2) * radial_speed(r, k)
    acceleration = e2 / (k.electron_mass * r**2)
    assert np.allclose(d_energy, -larmor_power(acceleration, k), rtol=1e-13)


def test_energy_bookkeeping_along_samples(k):
    # finite differences of the sampled virial energy follow the Larmor loss
    tr = integrate_spiral(k.a0, k, points=20001)
    energy = -k.electron_charge**2 / (2 * tr.r)
    rate = np.gradient(energy, tr.t)
    loss = larmor_power(k.electron_charge**2 / (k.electron_mass * tr.r**2), k)
    keep = slice(1, 10000)
    assert np.allclose(rate[keep], -loss[keep], rtol=1e-6)


@pytest.mark.parametrize("kwargs", [dict(points=1), dict(cutoff_fraction=0.0), dict(cutoff_fraction=1.0),
                                    dict(rtol=0.0)])
def test_integrate_validation(k, kwargs):
    with pytest.raises(DomainError):
        integrate_spiral(k.a0, k, **kwargs)


def test_scale_free(k):
    # the scaled solution is the same for any starting radius
    a = integrate_spiral(k.a0, k, points=50)
    b = integrate_spiral(3 * k.a0, k, points=50)
    assert np.allclose(a.r / a.r_start, b.r / b.r_start, rtol=1e-12)
    assert math.isclose(b.t[-1] / a.t[-1], 27.0, rel_tol=1e-12)
