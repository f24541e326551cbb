import csv
import io
import json

import pytest

from bohrsommerfeld.cli import MAX_ORBIT_POINTS, run

from conftest import matches_sig_digits


def invoke(capsys, *args):
    code = run(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(capsys, *args):
    code, out, err = invoke(capsys, *args, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def quantity(doc, name):
    return next(r["value"] for r in doc["rows"] if r["quantity"] == name)


def test_bohr_helium_line(capsys):
    code, out, _ = invoke(capsys, "bohr", "--z", "2", "--n1", "2", "--n2", "1")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("wavelength"))
    assert "30.37" in line and line.endswith("nm")
    doc = rows_of(capsys, "bohr", "--z", "2", "--n1", "2", "--n2", "1")
    assert matches_sig_digits(quantity(doc, "wavelength"), 30.379, 4)
    assert quantity(doc, "direction") == "emission"


def test_spectrum_csv(capsys):
    code, out, _ = invoke(capsys, "spectrum", "--model", "dirac", "--z", "1", "--nmax", "2", "--format", "csv")
    assert code == 0
    table = list(csv.DictReader(io.StringIO(out)))
    assert list(table[0]) == ["n", "n_r", "j", "ratio", "energy"]
    assert [(r["n_r"], r["j"]) for r in table] == [("0", "0.5"), ("1", "0.5"), ("0", "1.5")]
    assert float(table[0]["energy"]) == pytest.approx(-13.6051180, rel=1e-7)


def test_spectrum_supercritical(capsys):
    code, out, err = invoke(capsys, "spectrum", "--model", "dirac", "--z", "200")
    assert code == 1
    assert out == ""
    assert len(err.strip().splitlines()) == 1
    assert "supercritical" in err


@pytest.mark.parametrize("args", [
    ["spectrum", "--model", "klein"],
    ["bohr", "--z", "1", "--n1", "2"],
    ["bohr", "--z", "1", "--n1", "0", "--n2", "1"],
    ["nonsense"],
    ["orbit", "--points", str(MAX_ORBIT_POINTS + 1)],
    ["wkb", "--kind", "dirac", "--angular", "half"],
])
def test_usage_errors(capsys, args):
    code, _, err = invoke(capsys, *args)
    assert code == 2
    assert "Error" in err


@pytest.mark.parametrize("args", [
    ["integral", "--a", "1", "--b", "1", "--c", "1"],
    ["bohr", "--z", "1", "--n1", "2", "--n2", "2"],
    ["wkb", "--kind", "rel_schrodinger", "--z", "100", "--angular", "0"],
    ["orbit", "--z", "140", "--nr", "0", "--ntheta", "1"],
    ["expand", "--model", "dirac", "--n", "1", "--j", "3/2"],
])
def test_domain_errors(capsys, args):
    code, out, err = invoke(capsys, *args)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")


@pytest.mark.parametrize("args", [
    ["constants"],
    ["bohr", "--z", "2", "--n1", "3", "--n2", "1"],
    ["spectrum", "--model", "old-sommerfeld", "--nmax", "3"],
    ["spectrum", "--model", "rel-schrodinger", "--nmax", "2", "--method", "wkb-numeric"],
    ["orbit", "--points", "50"],
    ["integral", "--a", "2", "--b", "5", "--c", "0.5"],
    ["wkb", "--kind", "dirac", "--z", "10", "--nr", "2", "--angular", "3/2"],
    ["expand", "--model", "dirac", "--n", "2", "--j", "1/2"],
    ["compare", "--nmax", "2"],
    ["spiral", "--points", "10", "--trajectory"],
])
def test_json_round_trip(capsys, args):
    code, out, _ = invoke(capsys, *args, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == out
    assert {"meta", "rows"} == set(doc)
    assert doc["meta"]["command"].startswith("bohrsommerfeld " + args[0])


def test_alpha_override_is_uniform(capsys):
    alpha = 0.01
    consts = rows_of(capsys, "constants", "--alpha", str(alpha))
    assert quantity(consts, "alpha") == pytest.approx(alpha, rel=1e-15)
    levels = rows_of(capsys, "spectrum", "--model", "dirac", "--nmax", "1", "--alpha", str(alpha))
    assert levels["meta"]["alpha"] == pytest.approx(alpha, rel=1e-15)
    assert levels["rows"][0]["ratio"] == pytest.approx((1 - alpha**2) ** 0.5, rel=1e-14)


def test_units_are_uniform(capsys):
    bohr = rows_of(capsys, "bohr", "--z", "1", "--n1", "1", "--n2", "2", "--units", "natural")
    levels = rows_of(capsys, "spectrum", "--model", "nonrel", "--nmax", "1", "--units", "natural")
    assert quantity(bohr, "energy_n1") == pytest.approx(-0.5, rel=1e-14)
    assert levels["rows"][0]["energy"] == pytest.approx(quantity(bohr, "energy_n1"), rel=1e-14)
    assert quantity(bohr, "radius_n1") == pytest.approx(1.0, rel=1e-14)
    ev = rows_of(capsys, "bohr", "--z", "1", "--n1", "1", "--n2", "2", "--units", "ev")
    cgs = rows_of(capsys, "bohr", "--z", "1", "--n1", "1", "--n2", "2", "--units", "cgs")
    assert quantity(cgs, "energy_n1") == pytest.approx(quantity(ev, "energy_n1") * 1.602176634e-12, rel=1e-14)


def test_out_option(capsys, tmp_path):
    target = tmp_path / "levels.csv"
    code, out, _ = invoke(capsys, "spectrum", "--model", "nonrel", "--nmax", "2", "--format", "csv",
                          "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "n,n_r,l,ratio,energy"


def test_orbit_csv(capsys):
    code, out, _ = invoke(capsys, "orbit", "--z", "1", "--nr", "1", "--ntheta", "1", "--revolutions", "3",
                          "--points", "2000", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "theta,r,x,y"
    assert len(lines) == 2001
    first = [float(v) for v in lines[1].split(",")]
    assert first[0] == 0.0 and first[1] == first[2]


def test_orbit_meta(capsys):
    doc = rows_of(capsys, "orbit", "--z", "10", "--points", "3")
    assert doc["meta"]["perihelion_shift_rad"] > 0
    assert 0 < doc["meta"]["eccentricity"] < 1


def test_integral_output(capsys):
    doc = rows_of(capsys, "integral", "--a", "1", "--b", "3", "--c", "0.25")
    assert quantity(doc, "closed_form") == pytest.approx(3.141592653589793)
    assert quantity(doc, "relative_difference") < 1e-12


def test_wkb_output(capsys):
    doc = rows_of(capsys, "wkb", "--kind", "dirac", "--z", "1", "--nr", "0", "--angular", "1/2")
    assert quantity(doc, "relative_difference") < 1e-9
    assert abs(quantity(doc, "nu_residual")) < 1e-12
    assert quantity(doc, "wkb_branch") == -1


def test_expand_output(capsys):
    doc = rows_of(capsys, "expand", "--model", "dirac", "--n", "1", "--j", "1/2")
    assert [r["coefficient"] for r in doc["rows"]] == ["1", "-1/2", "-1/8", "-1/16", "-5/128"]
    assert doc["meta"]["remainder_order_estimate"] == pytest.approx(10, abs=0.2)
    doc = rows_of(capsys, "expand", "--model", "rel-schrodinger", "--n", "2", "--l", "0")
    assert doc["rows"][-1]["coefficient"] == "-13/128"


def test_compare_empty(capsys):
    doc = rows_of(capsys, "compare", "--nmax", "0")
    assert doc["rows"] == []


def test_compare_columns(capsys):
    doc = rows_of(capsys, "compare", "--nmax", "2")
    for row in doc["rows"]:
        assert row["dirac"] == row["old_sommerfeld"]


def test_spiral_summary(capsys):
    doc = rows_of(capsys, "spiral")
    assert matches_sig_digits(quantity(doc, "spiral_time"), 1.5564e-11, 4)
    assert matches_sig_digits(quantity(doc, "revolution_time_start"), 1.5199e-16, 4)
    assert matches_sig_digits(quantity(doc, "total_rotations"), 102400, 3)


def test_spiral_trajectory_csv(capsys):
    code, out, _ = invoke(capsys, "spiral", "--points", "5", "--trajectory", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,r" and len(lines) == 6


def test_text_format_has_meta(capsys):
    code, out, _ = invoke(capsys, "constants")
    assert code == 0
    assert out.startswith("# alpha: ")
    assert "bohr_radius" in out


def test_help_and_version(capsys):
    assert invoke(capsys, "--help")[0] == 0
    assert invoke(capsys, "spectrum", "--help")[0] == 0
    code, out, _ = invoke(capsys, "--version")
    assert code == 0 and "0.1.0" in out


def test_integral_eccentricity(capsys):
    doc = rows_of(capsys, "integral", "--eccentricity", "0.6", "--quad-tol", "1e-10")
    assert quantity(doc, "closed_form") == pytest.approx(0.25, abs=1e-15)
    assert abs(quantity(doc, "difference")) < 1e-12


@pytest.mark.parametrize("args", [
    ["integral", "--a", "1", "--b", "4"],
    ["integral", "--eccentricity", "0.5", "--a", "1"],
])
def test_integral_usage(capsys, args):
    assert invoke(capsys, *args)[0] == 2
