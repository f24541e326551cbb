"""Command-line interface.

Usage:
    bohrsommerfeld constants
    bohrsommerfeld bohr --z 2 --n1 2 --n2 1
    bohrsommerfeld spectrum --model dirac --z 1 --nmax 3 --format csv
    bohrsommerfeld orbit --z 1 --nr 1 --ntheta 1 --revolutions 3 --points 2000
    bohrsommerfeld integral --a 1 --b 3 --c 0.25
    bohrsommerfeld wkb --kind dirac --z 1 --nr 0 --angular 1/2
    bohrsommerfeld expand --model dirac --n 2 --angular 1/2 --orders 8
    bohrsommerfeld compare --z 1 --nmax 3
    bohrsommerfeld spiral --points 1000 --trajectory

Unit systems (``--units``):
    cgs      lengths in cm, energies in erg, times in s
    ev       lengths in cm, energies in eV, times in s, wavelengths in nm
    natural  atomic units: lengths in a0, energies in E0 = e^2/a0, times in hbar/E0

Every command writes one document made of ``meta`` (constants, units,
command line, version) and ``rows``. JSON carries both; CSV carries the
rows only; text prints meta as comment lines above an aligned table.
Exit status is 0 on success, 2 on a usage error and 1 when the inputs are
outside a model's domain.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import click
import numpy as np

from . import __version__
from . import bohr_model as bm
from . import classical_instability as ci
from . import fine_structure_analysis as fsa
from . import quantization as qz
from . import relativistic_kepler as rk
from . import sommerfeld_integrals as si
from .constants import ERG_PER_EV, PhysicalConstants, default_constants, with_alpha
from .errors import DomainError, QuadratureError

__all__ = ["cli", "run", "main"]

MAX_ORBIT_POINTS = 1_000_000
UNIT_SYSTEMS = ("cgs", "ev", "natural")
FORMATS = ("text", "csv", "json")


# ---------------------------------------------------------------- units


class Units:
    """Converts cgs values into the selected unit system and names the units."""

    def __init__(self, system: str, k: PhysicalConstants):
        self.system = system
        self.k = k

    def length(self, cm: float) -> float:
        return cm / self.k.a0 if self.system == "natural" else cm

    @property
    def length_unit(self) -> str:
        return "a0" if self.system == "natural" else "cm"

    def energy(self, erg: float) -> float:
        if self.system == "natural":
            return erg / self.k.e0
        if self.system == "ev":
            return erg / ERG_PER_EV
        return erg

    @property
    def energy_unit(self) -> str:
        return {"cgs": "erg", "ev": "eV", "natural": "E0"}[self.system]

    def time(self, seconds: float) -> float:
        return seconds * self.k.e0 / self.k.hbar if self.system == "natural" else seconds

    @property
    def time_unit(self) -> str:
        return "hbar/E0" if self.system == "natural" else "s"

    def wavelength(self, cm: float) -> float:
        if self.system == "ev":
            return cm * 1e7
        return self.length(cm)

    @property
    def wavelength_unit(self) -> str:
        return "nm" if self.system == "ev" else self.length_unit

    def speed(self, cm_per_s: float) -> float:
        if self.system == "natural":
            return cm_per_s * self.k.hbar / self.k.electron_charge**2
        return cm_per_s

    @property
    def speed_unit(self) -> str:
        return "e^2/hbar" if self.system == "natural" else "cm/s"


# ---------------------------------------------------------------- output


def _plain(value):
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _fmt_text(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render(meta: dict, rows: list[dict], fmt: str) -> str:
    """Serialize one output document."""
    rows = [{key: _plain(v) for key, v in row.items()} for row in rows]
    meta = {key: _plain(v) for key, v in meta.items()}
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": rows}, sort_keys=True, indent=2, allow_nan=False) + "\n"
    columns = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([repr(row[c]) if isinstance(row[c], float) else row[c] for c in columns])
        return buf.getvalue()
    lines = [f"# {key}: {meta[key]}" for key in sorted(meta)]
    cells = [[_fmt_text(row[c]) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    if columns:
        lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(ctx: click.Context, rows: list[dict], extra_meta: dict | None = None) -> None:
    opts = ctx.obj
    k = opts["k"]
    meta = {
        "command": " ".join(["bohrsommerfeld"] + opts["argv"]),
        "version": __version__,
        "units": opts["units"].system,
        "alpha": k.alpha,
        "electron_mass_g": k.electron_mass,
        "electron_charge_statC": k.electron_charge,
        "hbar_erg_s": k.hbar,
        "speed_of_light_cm_s": k.speed_of_light,
    }
    meta.update(extra_meta or {})
    text = render(meta, rows, opts["format"])
    if opts["out"] is None:
        click.echo(text, nl=False)
    else:
        Path(opts["out"]).write_text(text, encoding="utf-8")


def _quantity(name: str, value, unit: str) -> dict:
    return {"quantity": name, "value": value, "unit": unit}


# ---------------------------------------------------------------- common options


def _common(f):
    f = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                     help="Write to this file instead of standard output.")(f)
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True,
                     help="Output serialization.")(f)
    f = click.option("--units", type=click.Choice(UNIT_SYSTEMS), default="ev", show_default=True,
                     help="Unit system for dimensional output.")(f)
    f = click.option("--alpha", type=float, default=None,
                     help="Override the fine-structure constant (rescales the electron charge).")(f)
    return f


def _setup(ctx: click.Context, alpha, units, fmt, out) -> PhysicalConstants:
    k = default_constants()
    if alpha is not None:
        k = with_alpha(k, alpha)
    ctx.obj = {
        "k": k,
        "units": Units(units, k),
        "format": fmt,
        "out": out,
        "argv": getattr(ctx.find_root().command, "argv", []),
    }
    return k


def _angular(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"cannot read {text!r} as a number such as 2 or 1/2") from exc


class _Root(click.Group):
    # remembers the command line so it can be echoed in the output metadata
    def main(self, args=None, **kwargs):
        self.argv = list(sys.argv[1:] if args is None else args)
        return super().main(args=args, **kwargs)


@click.group(cls=_Root, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="bohrsommerfeld")
def cli() -> None:
    """Old quantum theory of hydrogen-like atoms: orbits, spectra and semiclassical checks."""


# ---------------------------------------------------------------- commands


@cli.command()
@_common
@click.pass_context
def constants(ctx, alpha, units, fmt, out):
    """Physical constants and derived atomic units."""
    k = _setup(ctx, alpha, units, fmt, out)
    u = ctx.obj["units"]
    rows = [
        _quantity("electron_mass", k.electron_mass, "g"),
        _quantity("electron_charge", k.electron_charge, "statC"),
        _quantity("hbar", k.hbar, "erg s"),
        _quantity("speed_of_light", k.speed_of_light, "cm/s"),
        _quantity("alpha", k.alpha, "1"),
        _quantity("inverse_alpha", 1.0 / k.alpha, "1"),
        _quantity("bohr_radius", u.length(k.a0), u.length_unit),
        _quantity("atomic_energy_unit", u.energy(k.e0), u.energy_unit),
        _quantity("rest_energy", u.energy(k.mc2), u.energy_unit),
    ]
    _emit(ctx, rows)


@cli.command()
@_common
@click.option("--z", type=float, default=1.0, show_default=True, help="Nuclear charge number.")
@click.option("--n1", type=click.IntRange(min=1), required=True, help="Initial level.")
@click.option("--n2", type=click.IntRange(min=1), required=True, help="Final level.")
@click.pass_context
def bohr(ctx, alpha, units, fmt, out, z, n1, n2):
    """Bohr radii, levels and the photon of the n1 -> n2 transition."""
    k = _setup(ctx, alpha, units, fmt, out)
    u = ctx.obj["units"]
    s1, s2 = bm.BohrState(z, n1), bm.BohrState(z, n2)
    tr = bm.transition(s1, s2, k)
    rows = [
        _quantity("radius_n1", u.length(bm.orbit_radius(s1, k)), u.length_unit),
        _quantity("radius_n2", u.length(bm.orbit_radius(s2, k)), u.length_unit),
        _quantity("energy_n1", u.energy(bm.energy_level(s1, k).value), u.energy_unit),
        _quantity("energy_n2", u.energy(bm.energy_level(s2, k).value), u.energy_unit),
        _quantity("speed_n1", u.speed(bm.orbital_speed(s1, k)), u.speed_unit),
        _quantity("photon_energy", u.energy(tr.photon_energy), u.energy_unit),
        _quantity("direction", tr.direction, ""),
        _quantity("wavelength", u.wavelength(tr.wavelength_cm), u.wavelength_unit),
    ]
    _emit(ctx, rows)


_SPECTRUM_METHODS = {"analytic": "analytic", "wkb-numeric": "numeric_wkb", "nu": "nikiforov_uvarov"}


@cli.command()
@_common
@click.option("--model", type=click.Choice(qz.SPECTRUM_MODELS), required=True)
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=3, show_default=True,
              help="Largest principal number.")
@click.option("--method", type=click.Choice(list(_SPECTRUM_METHODS)), default="analytic", show_default=True)
@click.pass_context
def spectrum(ctx, alpha, units, fmt, out, model, z, nmax, method):
    """Level table of one model.

    ``ratio`` is E/mc^2 (eps0 in E0 for the nonrelativistic model);
    ``energy`` is the level measured from the ionization threshold.
    """
    k = _setup(ctx, alpha, units, fmt, out)
    u = ctx.obj["units"]
    label = {"nonrel": "l", "rel-schrodinger": "l", "dirac": "j", "old-sommerfeld": "n_theta"}[model]
    rows = []
    for r in qz.spectrum(model, z, nmax, k, _SPECTRUM_METHODS[method]):
        angular = Fraction(r.angular.split("=")[1])
        rows.append({
            "n": r.n,
            "n_r": r.n_r,
            label: float(angular) if label == "j" else int(angular),
            "ratio": r.value,
            "energy": u.energy(r.binding_ev * ERG_PER_EV),
        })
    _emit(ctx, rows, {"model": model, "method": method, "z": z, "energy_unit": u.energy_unit,
                      "ratio_unit": "E0" if model == "nonrel" else "mc2"})


@cli.command()
@_common
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--nr", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--ntheta", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--revolutions", type=click.FloatRange(min=0, min_open=True), default=3.0, show_default=True)
@click.option("--points", type=click.IntRange(min=2), default=2000, show_default=True,
              help=f"Samples along the orbit (at most {MAX_ORBIT_POINTS}).")
@click.pass_context
def orbit(ctx, alpha, units, fmt, out, z, nr, ntheta, revolutions, points):
    """Quantized relativistic Kepler orbit sampled as theta, r, x, y."""
    if points > MAX_ORBIT_POINTS:
        raise click.BadParameter(f"at most {MAX_ORBIT_POINTS} points, got {points}", param_hint="--points")
    k = _setup(ctx, alpha, units, fmt, out)
    u = ctx.obj["units"]
    q = rk.SommerfeldQuantumNumbers(nr, ntheta)
    g = rk.quantized_orbit(q, z, k).to_cm(z, k)
    theta = np.linspace(0.0, 2.0 * math.pi * revolutions, points)
    table = rk.sample_orbit(g, theta)
    rows = [{"theta": t, "r": u.length(r), "x": u.length(x), "y": u.length(y)} for t, r, x, y in table.tolist()]
    energy = rk.old_fine_structure_energy(q, z, k).value
    _emit(ctx, rows, {
        "z": z, "n_r": nr, "n_theta": ntheta,
        "semi_major": u.length(g.semi_major), "eccentricity": g.eccentricity, "omega": g.omega,
        "perihelion_shift_rad": rk.perihelion_shift(g), "energy_ratio_mc2": energy,
        "length_unit": u.length_unit,
    })


@cli.command()
@_common
@click.option("--a", "a_coef", type=float, help="A > 0.")
@click.option("--b", "b_coef", type=float, help="B >= 2 sqrt(AC).")
@click.option("--c", "c_coef", type=float, help="C > 0.")
@click.option("--eccentricity", type=float, help="Evaluate the eccentricity integral instead, 0 <= eps < 1.")
@click.option("--quad-tol", "--rel-tol", "rel_tol", type=float, default=1e-12, show_default=True,
              help="Relative tolerance of the quadrature.")
@click.pass_context
def integral(ctx, alpha, units, fmt, out, a_coef, b_coef, c_coef, eccentricity, rel_tol):
    """Action integral of sqrt(-A + B/r - C/r^2) by closed form and by quadrature.

    With --eccentricity, the mean of eps^2 sin^2 phi / (1 + eps cos phi)^2
    is compared with (1 - eps^2)^(-1/2) - 1 instead.
    """
    _setup(ctx, alpha, units, fmt, out)
    given = [v is not None for v in (a_coef, b_coef, c_coef)]
    if eccentricity is not None:
        if any(given):
            raise click.UsageError("--eccentricity cannot be combined with --a, --b or --c")
        numeric, closed = si.eccentricity_integral(eccentricity, rel_tol)
        rows = [
            _quantity("eccentricity", eccentricity, "1"),
            _quantity("closed_form", closed, "1"),
            _quantity("quadrature", numeric, "1"),
            _quantity("difference", numeric - closed, "1"),
        ]
        _emit(ctx, rows)
        return
    if not all(given):
        raise click.UsageError("give all of --a, --b and --c, or --eccentricity")
    abc = si.AbcCoefficients(a_coef, b_coef, c_coef)
    r1, r2 = si.turning_points(abc)
    closed = si.closed_form(abc)
    numeric = si.quadrature(abc, rel_tol)
    rel = abs(numeric - closed) / abs(closed) if closed else abs(numeric)
    rows = [
        _quantity("r_min", r1, "1"),
        _quantity("r_max", r2, "1"),
        _quantity("closed_form", closed, "1"),
        _quantity("quadrature", numeric, "1"),
        _quantity("difference", numeric - closed, "1"),
        _quantity("relative_difference", rel, "1"),
    ]
    _emit(ctx, rows)


@cli.command()
@_common
@click.option("--kind", type=click.Choice(qz.KINDS), required=True)
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--nr", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--angular", default="0", show_default=True, help="l for Schroedinger kinds, j (e.g. 1/2) for dirac.")
@click.option("--action", type=click.Choice(["quadrature", "closed_form"]), default="quadrature", show_default=True)
@click.option("--rel-tol", type=float, default=1e-12, show_default=True)
@click.pass_context
def wkb(ctx, alpha, units, fmt, out, kind, z, nr, angular, action, rel_tol):
    """Numerical WKB level against the closed form and the NU condition."""
    k = _setup(ctx, alpha, units, fmt, out)
    p = qz.RadialProblem.build(kind, z, _angular(angular), k)
    numeric = qz.numeric_wkb_energy(p, nr, rel_tol, action)
    exact = qz.analytic_energy(p, nr)
    branch, index = qz.wkb_index(p, nr)
    abc = qz.abc_from_binding(p, qz.analytic_binding(p, nr), branch)
    nu_res, lam, tau_prime = qz.nikiforov_uvarov_rule(abc.a_coef, abc.b_coef, abc.c_coef, index)
    unit = "E0" if exact.unit == "ratio_E0" else "mc2"
    rows = [
        _quantity("energy_numeric", numeric.energy.value, unit),
        _quantity("energy_analytic", exact.value, unit),
        _quantity("relative_difference", abs(numeric.energy.value - exact.value) / abs(exact.value), "1"),
        _quantity("wkb_branch", branch, "1"),
        _quantity("wkb_index", index, "1"),
        _quantity("A", abc.a_coef, "1"),
        _quantity("B", abc.b_coef, "1"),
        _quantity("C", abc.c_coef, "1"),
        _quantity("generic_rule_residual", qz.generic_rule_residual(abc, index), "1"),
        _quantity("nu_residual", nu_res, "1"),
        _quantity("nu_lambda", lam, "1"),
        _quantity("nu_tau_prime", tau_prime, "1"),
    ]
    _emit(ctx, rows, {"kind": kind, "z": z, "n_r": nr, "angular": float(p.angular)})


@cli.command()
@_common
@click.option("--model", type=click.Choice(["dirac", "rel-schrodinger"]), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--angular", "--j", "--l", "angular", default="1/2", show_default=True,
              help="j for dirac, l for rel-schrodinger.")
@click.option("--orders", type=click.IntRange(min=0), default=None, help="Highest power of mu (even).")
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--mu", type=float, default=None, help="Coupling; defaults to Z alpha.")
@click.pass_context
def expand(ctx, alpha, units, fmt, out, model, n, angular, orders, z, mu):
    """Partial sums of the small-coupling expansion with remainder orders."""
    k = _setup(ctx, alpha, units, fmt, out)
    mu = z * k.alpha if mu is None else mu
    ang = _angular(angular)
    if model == "dirac":
        report = fsa.expand_dirac(n, ang, mu, 8 if orders is None else orders)
    else:
        if ang.denominator != 1:
            raise DomainError(f"l must be an integer, got {angular}")
        report = fsa.expand_rel_schrodinger(n, int(ang), mu, 4 if orders is None else orders)
    rows = []
    for i, (c, s, slope) in enumerate(zip(report.coefficients, report.partial_sums, report.remainder_slopes)):
        rows.append({
            "power": 2 * i,
            "coefficient": str(c),
            "coefficient_value": float(c),
            "partial_sum": s,
            "remainder_slope": slope,
        })
    _emit(ctx, rows, {"model": model, "n": n, "angular": float(ang), "mu": mu, "exact": report.exact,
                      "remainder_order_estimate": report.remainder_order_estimate})


@cli.command()
@_common
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=3, show_default=True)
@click.pass_context
def compare(ctx, alpha, units, fmt, out, z, nmax):
    """Old-formula, Dirac and relativistic Schroedinger levels side by side (E/mc^2)."""
    k = _setup(ctx, alpha, units, fmt, out)
    rows = []
    for r in fsa.comparison_table(z, nmax, k):
        rows.append({
            "n": r.n, "n_r": r.n_r, "l": r.l, "j": float(r.j), "n_theta": r.n_theta,
            "old_sommerfeld": r.old_sommerfeld, "dirac": r.dirac, "rel_schrodinger": r.rel_schrodinger,
            "dirac_series_mu4": r.dirac_series_mu4, "rel_schrodinger_series_mu4": r.rel_schrodinger_series_mu4,
        })
    _emit(ctx, rows, {"z": z})


@cli.command()
@_common
@click.option("--r-start", type=float, default=None, help="Initial radius in cm (default: a0).")
@click.option("--points", type=click.IntRange(min=2, max=MAX_ORBIT_POINTS), default=1000, show_default=True)
@click.option("--trajectory", is_flag=True, help="Emit the integrated (t, r) samples as rows.")
@click.pass_context
def spiral(ctx, alpha, units, fmt, out, r_start, points, trajectory):
    """Classical radiative collapse of the hydrogen electron."""
    k = _setup(ctx, alpha, units, fmt, out)
    u = ctx.obj["units"]
    r0 = k.a0 if r_start is None else r_start
    tr = ci.integrate_spiral(r0, k, points=points)
    summary = [
        _quantity("r_start", u.length(r0), u.length_unit),
        _quantity("spiral_time", u.time(ci.spiral_time(r0, k)), u.time_unit),
        _quantity("collapse_time_integrated", u.time(tr.collapse_time), u.time_unit),
        _quantity("speed_start", u.speed(ci.circular_speed(r0, k)), u.speed_unit),
        _quantity("revolution_time_start", u.time(ci.revolution_time(r0, k)), u.time_unit),
        _quantity("total_rotations", ci.total_rotations(r0, k), "1"),
        _quantity("integrated_rotations", tr.integrated_rotations, "1"),
    ]
    if not trajectory:
        _emit(ctx, summary)
        return
    rows = [{"t": u.time(t), "r": u.length(r)} for t, r in zip(tr.t.tolist(), tr.r.tolist())]
    meta = {row["quantity"]: row["value"] for row in summary}
    meta.update({"time_unit": u.time_unit, "length_unit": u.length_unit})
    _emit(ctx, rows, meta)


# ---------------------------------------------------------------- entry points


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and return the exit status instead of exiting."""
    try:
        result = cli.main(args=argv, prog_name="bohrsommerfeld", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except (DomainError, QuadratureError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except RuntimeError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())



if __name__ == "__main__":
    main()
