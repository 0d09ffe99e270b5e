import json
import math

import pytest

import maass_shift as ms


def test_tau_values():
    assert ms.tau(6) == [1, -24, 252, -1472, 4830, -6048]


def test_mock_dhat_magnitude():
    value, err = ms.dhat(1, bits=256)
    assert ms.agrees_to_digits(abs(value), 33.38465, 5)
    assert 0 < err < 1e-20


def test_mock_and_projection_agree():
    s = ms.Session(ms.RunConfig())
    mock = s.dhat([2], "mock").rows[0].cells[0]
    proj = s.dhat([2], "projection").rows[0].cells[0]
    assert proj.route == "projection"
    assert math.isclose(float(mock.value), float(proj.value), rel_tol=1e-6)


def test_report_json_round_trip():
    r = ms.Session().tau(3)
    d = ms.report_dict(r)
    assert d["title"] == r.title
    assert d["rows"][2]["values"][0]["value"] == "252"
    assert json.loads(r.to_json()) == d
    assert r.to_csv().splitlines()[0].startswith("index,")


def test_loglog_fit_power_law():
    xs = [2.0, 3.0, 5.0, 7.0]
    fit = ms.loglog_fit(xs, [x**5 for x in xs])
    assert fit.slope == pytest.approx(5.0, rel=1e-12)
    assert fit.points == 4


def test_projection_integral_at_zero():
    x = 7 / 9
    expected = 3628800 * (1 - x**11) / (8 * math.pi)
    assert ms.projection_integral(12, 7, 2) == pytest.approx(expected, rel=1e-13)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        ms.dhat(1, route="sideways")
    with pytest.raises(ValueError):
        ms.projection_integral(12, 1, 1, 1.0)
    with pytest.raises(TypeError):
        ms.dhat(1, precision=10)
    cfg = ms.RunConfig()
    cfg.c_max = 0
    with pytest.raises(ValueError):
        cfg.validate()
