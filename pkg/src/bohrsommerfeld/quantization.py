"""Semiclassical quantization of the three Coulomb radial problems.

Radii are measured in a0 for the nonrelativistic problem and in the reduced
Compton length hbar/(mc) for the relativistic ones, so every effective
momentum takes the form p^2 = -A + B/x - C/x^2 and the action integral
reduces to the one in :mod:`bohrsommerfeld.sommerfeld_integrals`.

Radial numbering. ``n_r`` always counts levels from 0 upward for fixed
angular data. For the Dirac problem the effective potential with
C = (nu + 1/2)^2 holds the level n_r at WKB index n_r - 1; its companion
obtained by nu -> -nu, with C = (nu - 1/2)^2, holds every level at index
n_r. The companion is used for n_r = 0, where the first branch has no
solution; for n_r >= 1 both branches give the same energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from . import sommerfeld_integrals as si
from .constants import EnergyLevel, PhysicalConstants
from .errors import BracketingError, DomainError, SupercriticalCouplingError
from .relativistic_kepler import sommerfeld_energy_ratio

__all__ = [
    "KINDS",
    "METHODS",
    "SPECTRUM_MODELS",
    "RadialProblem",
    "QuantizationResult",
    "SpectrumRow",
    "dirac_nu",
    "langer_effective_momentum_squared",
    "wkb_index",
    "abc_of",
    "energy_nonrel",
    "energy_rel_schrodinger",
    "energy_dirac",
    "analytic_energy",
    "analytic_binding",
    "abc_from_binding",
    "numeric_wkb_energy",
    "generic_rule_residual",
    "nikiforov_uvarov_rule",
    "nu_energy",
    "spectrum",
]

KINDS = ("nonrel_schrodinger", "rel_schrodinger", "dirac")
METHODS = ("analytic", "numeric_wkb", "nikiforov_uvarov")
SPECTRUM_MODELS = ("nonrel", "rel-schrodinger", "dirac", "old-sommerfeld")

_SCAN_POINTS = 64


def _as_angular(kind: str, angular):
    if kind == "dirac":
        twice = Fraction(angular) * 2
        if twice.denominator != 1 or twice.numerator % 2 != 1 or twice < 1:
            raise DomainError(f"j must be a half-integer >= 1/2, got {angular!r}")
        return Fraction(angular)
    if int(angular) != angular or angular < 0:
        raise DomainError(f"l must be an integer >= 0, got {angular!r}")
    return int(angular)


@dataclass(frozen=True)
class RadialProblem:
    """One Coulomb radial problem: kind, nuclear charge, coupling mu = Z alpha and l or j.

    Supercritical coupling (mu >= l + 1/2 or mu >= j + 1/2) is rejected here.
    """

    kind: str
    z: float
    mu: float
    angular: float | Fraction

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown problem kind {self.kind!r}; expected one of {KINDS}")
        if not self.z > 0:
            raise DomainError(f"nuclear charge z must be positive, got {self.z!r}")
        if not self.mu > 0:
            raise DomainError(f"coupling mu must be positive, got {self.mu!r}")
        angular = _as_angular(self.kind, self.angular)
        object.__setattr__(self, "angular", angular)
        if self.kind != "nonrel_schrodinger" and not self.mu < float(angular) + 0.5:
            label = "j" if self.kind == "dirac" else "l"
            raise SupercriticalCouplingError(
                f"mu = {self.mu:.6g} >= {label} + 1/2 = {float(angular) + 0.5}: coupling is supercritical"
            )

    @classmethod
    def build(cls, kind: str, z: float, angular, k: PhysicalConstants) -> RadialProblem:
        return cls(kind, z, z * k.alpha, angular)

    @property
    def langer_c(self) -> float:
        """(l + 1/2)^2, the Langer-corrected centrifugal strength for Schroedinger kinds."""
        return (float(self.angular) + 0.5) ** 2


@dataclass(frozen=True)
class QuantizationResult:
    """A solved level; ``binding`` is -eps0 or 1 - E/mc^2 kept to full precision."""

    energy: EnergyLevel
    n_r: int
    abc: si.AbcCoefficients
    method: str
    binding: float


@dataclass(frozen=True)
class SpectrumRow:
    model: str
    n: int
    n_r: int
    angular: str
    value: float
    unit: str
    binding_ev: float


def dirac_nu(j, mu: float) -> float:
    """nu = sqrt((j + 1/2)^2 - mu^2)."""
    s = float(j) + 0.5
    if not mu < s:
        raise SupercriticalCouplingError(f"mu = {mu:.6g} >= j + 1/2 = {s}: nu is not real")
    return math.sqrt((s - mu) * (s + mu))


def _check_n_r(n_r) -> int:
    if int(n_r) != n_r or n_r < 0:
        raise DomainError(f"n_r must be an integer >= 0, got {n_r!r}")
    return int(n_r)


def _c_coef(p: RadialProblem, branch: int) -> float:
    if p.kind == "nonrel_schrodinger":
        return p.langer_c
    if p.kind == "rel_schrodinger":
        l_half = float(p.angular) + 0.5
        return (l_half - p.mu) * (l_half + p.mu)
    nu = dirac_nu(p.angular, p.mu)
    if branch == 1:
        return (nu + 0.5) ** 2
    if not nu > 0.5:
        raise DomainError(f"nu = {nu:.6g} <= 1/2: the nu -> -nu branch has no Langer form here")
    return (nu - 0.5) ** 2


def _check_branch(p: RadialProblem, branch: int) -> None:
    if branch not in (1, -1):
        raise DomainError(f"branch must be +1 or -1, got {branch!r}")
    if branch == -1 and p.kind != "dirac":
        raise DomainError("the nu -> -nu branch exists only for the Dirac problem")


def langer_effective_momentum_squared(p: RadialProblem, energy: float, x, branch: int = 1):
    """Effective p^2(x) with the Langer correction.

    ``energy`` is eps0 in E0 units for the nonrelativistic problem and E/mc^2
    otherwise. Negative values mark the classically forbidden region.
    """
    _check_branch(p, branch)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("radius must be positive")
    if p.kind == "nonrel_schrodinger":
        return 2.0 * (energy + p.z / x) - p.langer_c / x**2
    if p.kind == "rel_schrodinger":
        return (energy + p.mu / x) ** 2 - 1.0 - p.langer_c / x**2
    # (eps + mu/x)^2 brings +mu^2/x^2, which the Dirac centrifugal term cancels
    return (energy + p.mu / x) ** 2 - 1.0 - (_c_coef(p, branch) + p.mu**2) / x**2


def wkb_index(p: RadialProblem, n_r: int) -> tuple[int, int]:
    """(branch, index) at which level ``n_r`` satisfies int p dr = pi (index + 1/2)."""
    n_r = _check_n_r(n_r)
    if p.kind != "dirac":
        return 1, n_r
    if n_r >= 1:
        return 1, n_r - 1
    return -1, 0


def _check_bound(p: RadialProblem, energy: float) -> None:
    if p.kind == "nonrel_schrodinger":
        if not energy < 0:
            raise DomainError(f"bound eps0 must be negative, got {energy!r}")
    elif not 0.0 < energy < 1.0:
        raise DomainError(f"bound E/mc^2 must lie in (0, 1), got {energy!r}")


def abc_of(p: RadialProblem, energy: float, branch: int = 1) -> si.AbcCoefficients:
    """(A, B, C) of the effective momentum at the given bound energy.

    nonrel: (-2 eps0, 2Z, (l+1/2)^2); rel_schrodinger: (1 - eps^2, 2 mu eps,
    (l+1/2)^2 - mu^2); dirac: (1 - eps^2, 2 mu eps, (nu + branch/2)^2).
    """
    _check_branch(p, branch)
    _check_bound(p, energy)
    c_coef = _c_coef(p, branch)
    if p.kind == "nonrel_schrodinger":
        return si.AbcCoefficients(-2.0 * energy, 2.0 * p.z, c_coef)
    return si.AbcCoefficients((1.0 - energy) * (1.0 + energy), 2.0 * p.mu * energy, c_coef)


def abc_from_binding(p: RadialProblem, delta: float, branch: int = 1) -> si.AbcCoefficients:
    """(A, B, C) at binding delta = -eps0 (nonrel) or 1 - E/mc^2.

    Forming 1 - eps^2 from a stored E/mc^2 close to 1 loses about
    log10(1/delta) digits; starting from delta keeps A fully accurate.
    """
    _check_branch(p, branch)
    if not (delta > 0 and (p.kind == "nonrel_schrodinger" or delta < 1.0)):
        raise DomainError(f"binding must lie in the bound range, got {delta!r}")
    return _abc_from_binding(p, delta, _c_coef(p, branch))


def _abc_from_binding(p: RadialProblem, delta: float, c_coef: float) -> si.AbcCoefficients:
    if p.kind == "nonrel_schrodinger":
        return si.AbcCoefficients(2.0 * delta, 2.0 * p.z, c_coef)
    return si.AbcCoefficients(delta * (2.0 - delta), 2.0 * p.mu * (1.0 - delta), c_coef)


def energy_nonrel(z: float, n_r: int, l: int) -> EnergyLevel:
    """eps0 = -Z^2 / (2 (n_r + l + 1)^2) in E0 units."""
    # mu plays no role in the nonrelativistic levels
    return analytic_energy(RadialProblem("nonrel_schrodinger", z, 1.0, l), n_r)


def energy_rel_schrodinger(z: float, n_r: int, l: int, k: PhysicalConstants) -> EnergyLevel:
    """E/mc^2 = [1 + (mu / (n_r + nu + 1))^2]^(-1/2), nu = -1/2 + sqrt((l+1/2)^2 - mu^2)."""
    return analytic_energy(RadialProblem.build("rel_schrodinger", z, l, k), n_r)


def energy_dirac(z: float, n_r: int, j, k: PhysicalConstants) -> EnergyLevel:
    """E/mc^2 = [1 + mu^2 / (n_r + nu)^2]^(-1/2), nu = sqrt((j+1/2)^2 - mu^2); n_r = 0 is lowest."""
    return analytic_energy(RadialProblem.build("dirac", z, j, k), n_r)


def analytic_energy(p: RadialProblem, n_r: int) -> EnergyLevel:
    """Closed-form level: eps0 = -Z^2/(2n^2), or E/mc^2 = [1 + mu^2/N^2]^(-1/2).

    N = n_r + nu + 1 with nu = -1/2 + sqrt((l+1/2)^2 - mu^2) for the
    relativistic Schroedinger problem and N = n_r + sqrt((j+1/2)^2 - mu^2)
    for the Dirac problem.
    """
    big_n = _principal(p, _check_n_r(n_r))
    if p.kind == "nonrel_schrodinger":
        return EnergyLevel(-(p.z**2) / (2.0 * big_n**2), "ratio_E0")
    return EnergyLevel(1.0 / math.sqrt(1.0 + (p.mu / big_n) ** 2), "ratio_mc2")


def _principal(p: RadialProblem, n_r: int) -> float:
    # N with B / (2 sqrt A) = N at the level
    if p.kind == "nonrel_schrodinger":
        return n_r + p.angular + 1.0
    if p.kind == "rel_schrodinger":
        return n_r + 0.5 + math.sqrt(_c_coef(p, 1))
    return n_r + dirac_nu(p.angular, p.mu)


def _binding_of_principal(p: RadialProblem, big_n: float) -> float:
    if p.kind == "nonrel_schrodinger":
        return p.z**2 / (2.0 * big_n**2)
    # 1 - N / R with R = sqrt(N^2 + mu^2), written without cancellation
    r = math.hypot(big_n, p.mu)
    return p.mu**2 / (r * (r + big_n))


def analytic_binding(p: RadialProblem, n_r: int) -> float:
    """Exact binding -eps0 or 1 - E/mc^2 of level ``n_r``, free of cancellation."""
    return _binding_of_principal(p, _principal(p, _check_n_r(n_r)))


def _energy_from_binding(p: RadialProblem, delta: float) -> EnergyLevel:
    if p.kind == "nonrel_schrodinger":
        return EnergyLevel(-delta, "ratio_E0")
    return EnergyLevel(1.0 - delta, "ratio_mc2")


def numeric_wkb_energy(p: RadialProblem, n_r: int, rel_tol: float = 1e-12,
                       action: str = "quadrature") -> QuantizationResult:
    """Bound energy from int p dr = pi (index + 1/2), found numerically.

    The binding delta (-eps0, or 1 - E/mc^2) is scanned on 64 log-spaced
    points from deep to shallow; the first sign change is refined with
    Brent's method. The action is zero wherever no allowed region exists.

    Args:
        p: the radial problem.
        n_r: radial number, 0 for the lowest level.
        rel_tol: relative tolerance of the action quadrature and of delta.
        action: "quadrature" integrates numerically, "closed_form" uses the
            elementary result.

    Raises:
        BracketingError: if no sign change occurs in the scanned interval.
    """
    if action not in ("quadrature", "closed_form"):
        raise DomainError(f"action must be 'quadrature' or 'closed_form', got {action!r}")
    branch, index = wkb_index(p, n_r)
    c_coef = _c_coef(p, branch)
    target = math.pi * (index + 0.5)
    quad_tol = min(max(rel_tol, 1e-13), 1e-3)

    def residual(delta: float) -> float:
        abc = _abc_from_binding(p, delta, c_coef)
        if not abc.has_allowed_region:
            return -target
        value = si.quadrature(abc, quad_tol) if action == "quadrature" else si.closed_form(abc)
        return value - target

    if p.kind == "nonrel_schrodinger":
        lo, hi = 1e-12, 2.0 * p.z**2
    else:
        lo, hi = 1e-12, 1.0 - 1e-9
    grid = np.geomspace(hi, lo, _SCAN_POINTS)
    previous_delta, previous = grid[0], residual(grid[0])
    bracket = None
    for delta in grid[1:]:
        current = residual(delta)
        if previous < 0.0 <= current:
            bracket = (float(delta), float(previous_delta))
            break
        previous_delta, previous = delta, current
    if bracket is None:
        raise BracketingError(
            f"no sign change of the action residual for binding in [{lo:g}, {hi:g}] "
            f"({p.kind}, Z={p.z}, angular={p.angular}, n_r={n_r})"
        )
    delta = brentq(residual, *bracket, xtol=1e-300, rtol=max(rel_tol, 4 * np.finfo(float).eps), maxiter=200)
    energy = _energy_from_binding(p, delta)
    return QuantizationResult(energy, n_r, _abc_from_binding(p, delta, c_coef), "numeric_wkb", delta)


def generic_rule_residual(abc: si.AbcCoefficients, n_r: int) -> float:
    """B / (2 sqrt A) - sqrt C - (n_r + 1/2)."""
    return abc.b_coef / (2.0 * math.sqrt(abc.a_coef)) - math.sqrt(abc.c_coef) - (n_r + 0.5)


def nikiforov_uvarov_rule(a: float, b: float, c: float, n: int) -> tuple[float, float, float]:
    """Residual of the NU condition lambda + n tau' + n (n - 1) sigma'' / 2 = 0.

    For the Coulomb form sigma = x, tau' = -2 sqrt(a), sigma'' = 0 and
    lambda = b - 2 sqrt(ac) - sqrt(a). The residual is normalized by 2 sqrt(a).

    Returns:
        (residual, lambda, tau_prime)
    """
    if not (a > 0 and c > 0):
        raise DomainError(f"a and c must be positive, got a={a!r}, c={c!r}")
    root_a = math.sqrt(a)
    lam = b - 2.0 * math.sqrt(a * c) - root_a
    tau_prime = -2.0 * root_a
    sigma_pp = 0.0
    condition = lam + n * tau_prime + n * (n - 1) * sigma_pp / 2.0
    return condition / (2.0 * root_a), lam, tau_prime


def nu_energy(p: RadialProblem, n_r: int) -> QuantizationResult:
    """Energy at which the NU condition holds, with (a, b, c) = (A, B, C).

    c is energy independent, so lambda + n tau' = 0 gives b / (2 sqrt a) =
    sqrt(c) + n + 1/2 =: N, which is inverted for the energy.
    """
    branch, index = wkb_index(p, n_r)
    c_coef = _c_coef(p, branch)
    big_n = math.sqrt(c_coef) + index + 0.5
    delta = _binding_of_principal(p, big_n)
    return QuantizationResult(_energy_from_binding(p, delta), n_r,
                              _abc_from_binding(p, delta, c_coef), "nikiforov_uvarov", delta)


def _label(kind_or_model: str, angular) -> str:
    if kind_or_model == "dirac":
        return f"j={Fraction(angular)}"
    if kind_or_model == "old-sommerfeld":
        return f"n_theta={angular}"
    return f"l={angular}"


def spectrum(model: str, z: float, n_max: int, k: PhysicalConstants,
             method: str = "analytic") -> list[SpectrumRow]:
    """Levels with principal number n <= n_max, ordered by n, then angular number.

    ``binding_ev`` is eps0 E0 for the nonrelativistic model and
    (E/mc^2 - 1) mc^2 otherwise, both in eV.
    """
    if model not in SPECTRUM_MODELS:
        raise DomainError(f"unknown model {model!r}; expected one of {SPECTRUM_MODELS}")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    if int(n_max) != n_max or n_max < 1:
        raise DomainError(f"n_max must be an integer >= 1, got {n_max!r}")
    if model == "old-sommerfeld" and method != "analytic":
        raise DomainError("the old-sommerfeld model has only the analytic method")

    rows = []
    mc2_ev = EnergyLevel(1.0, "ratio_mc2").to("eV", k).value
    e0_ev = EnergyLevel(1.0, "ratio_E0").to("eV", k).value
    for n in range(1, n_max + 1):
        for i in range(n):
            if model == "old-sommerfeld":
                n_theta = i + 1
                value = sommerfeld_energy_ratio(n - n_theta, n_theta, z * k.alpha)
                delta = _old_binding(n - n_theta, n_theta, z * k.alpha)
                rows.append(SpectrumRow(model, n, n - n_theta, _label(model, n_theta), value,
                                        "ratio_mc2", -delta * mc2_ev))
                continue
            kind = {"nonrel": "nonrel_schrodinger", "rel-schrodinger": "rel_schrodinger"}.get(model, model)
            angular = Fraction(2 * i + 1, 2) if kind == "dirac" else i
            n_r = n - i - 1
            p = RadialProblem.build(kind, z, angular, k)
            if method == "analytic":
                delta = analytic_binding(p, n_r)
            elif method == "numeric_wkb":
                delta = numeric_wkb_energy(p, n_r).binding
            else:
                delta = nu_energy(p, n_r).binding
            level = _energy_from_binding(p, delta)
            ev = -delta * (e0_ev if kind == "nonrel_schrodinger" else mc2_ev)
            rows.append(SpectrumRow(model, n, n_r, _label(kind, angular), level.value, level.unit, ev))
    return rows


def _old_binding(n_r: int, n_theta: int, coupling: float) -> float:
    # 1 - (1 + x)^(-1/2) = x / (w (1 + w)), w = sqrt(1 + x), x = coupling^2 / (n_r + gamma)^2
    gamma = math.sqrt((n_theta - coupling) * (n_theta + coupling))
    x = (coupling / (n_r + gamma)) ** 2
    w = math.sqrt(1.0 + x)
    return x / (w * (1.0 + w))
