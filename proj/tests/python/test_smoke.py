import math

import pytest

import exittime as et


def test_catalog():
    names = et.catalog_names()
    assert "cardioid" in names and "koebe" in names
    assert et.describe("cardioid")["closed_form"] == 2.5
    assert math.isinf(et.describe("koebe")["closed_form"])
    assert et.describe("mgon", m=6)["label"] == "mgon(m=6)"


def test_series_routes():
    assert et.exit_time("cardioid", tol=1e-12)["value"] == 2.5
    row = et.exit_time("strip")
    assert abs(row["value"] - math.pi**2 / 16) <= 1e-6
    assert et.exit_time("koebe")["value"] is None
    disc = et.exit_time("disc", radius=2.0, a=1j, tol=1e-11)
    assert abs(disc["value"] - 1.5) <= 1e-10
    assert et.exit_time("koebe", r=0.5, tol=1e-12)["value"] == pytest.approx(10 / 27, abs=1e-12)


def test_coefficients():
    a = et.coefficients("koebe", 6)
    assert [c.real for c in a] == [0, 1, 2, 3, 4, 5]


def test_green_and_simulate():
    g = et.green("cardioid", n_radial=128, n_angular=128)
    assert abs(g["value"] - 2.5) <= 1e-4
    row = et.simulate("disc", paths=2000, dt=1e-3, seed=3)
    assert abs(row.value - 0.5) <= 3 * row.bound + 0.05
    again = et.simulate("disc", paths=2000, dt=1e-3, seed=3, threads=2)
    assert again.value == row.value
    assert row.to_dict()["route"] == "mc"


def test_special():
    assert et.special.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    value, bound = et.special.mgon_exit_time(3)
    assert abs(value - 1 / 6) <= 1e-6
    lo, hi = et.special.wedge_bounds(0.25)
    assert lo < hi
    v, tail, terms = et.special.pfq_at_1([1.0, 1.0], [3.5], 1e-8)
    assert v == pytest.approx(et.special.gauss_2f1_at_1(1.0, 1.0, 3.5), abs=1e-7)


def test_errors():
    with pytest.raises(et.Error, match="Divergent"):
        et.special.wedge_bounds(0.5)
    with pytest.raises(et.Error, match="UnknownDomain"):
        et.describe("torus")
