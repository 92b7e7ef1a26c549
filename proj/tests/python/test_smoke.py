import json
import math

import pytest

import hardylab as hl

HALF_PLUS = [0.5, 0.5]
HALF_MINUS = [0.5, -0.5]


def test_mate_of_half_plus_is_half_minus():
    pair = hl.pythagorean_mate(HALF_PLUS)
    a = pair.a.taylor(4)
    assert abs(a[0] - 0.5) < 1e-8 and abs(a[1] + 0.5) < 1e-8
    assert abs(a[2]) < 1e-8
    assert pair.defect() < 1e-9


def test_margin_and_extreme_sentinel():
    assert hl.non_extremality_margin(HALF_PLUS) == pytest.approx(-2 * math.log(2), abs=1e-3)
    assert hl.non_extremality_margin([0, 1]) == -math.inf


def test_cayley_factorization():
    f = hl.factorize_rational([1, 1], [1, -1])
    assert abs(f.c - 1) < 1e-6
    assert f.residual < 1e-6
    b = f.pair.b.taylor(3)
    assert abs(b[0] - 0.5) < 1e-6 and abs(b[1] - 0.5) < 1e-6 and abs(b[2]) < 1e-6


def test_mate_closed_form():
    pair = hl.PythagoreanPair(HALF_PLUS, HALF_MINUS)
    sol = hl.solve_mate(pair, [0, 1], 256)
    assert sol.residual < 1e-10
    fp = sol.f_plus.taylor(3)
    assert abs(fp[0] - 2) < 1e-10 and abs(fp[1] - 1) < 1e-10 and abs(fp[2]) < 1e-12
    one = hl.solve_mate(pair, [1], 256)
    assert one.hb_norm == pytest.approx(math.sqrt(2), abs=1e-6)


def test_preimage_and_certification():
    pre = hl.toeplitz_preimage([0, 1], HALF_MINUS, 64)
    u = pre["u"].taylor(3)
    assert abs(u[0] - 2) < 1e-10 and abs(u[1] - 2) < 1e-10
    report = hl.lotto_sarason_check(hl.PythagoreanPair(HALF_PLUS, HALF_MINUS), [0, 1], [16, 64])
    assert report["verdict"] == "Multiplier"


def test_probe_of_constant_symbol():
    r = hl.hankel_continuity_probe([2.0], "hp", [16, 32], exponent=1.0)
    assert r["verdict"] == "Bounded" and r["norms"] == [0.0, 0.0]
    with pytest.raises(ValueError):
        hl.hankel_continuity_probe([2.0], "bergman", [16, 32])


def test_gevrey_fit_on_generator():
    coeffs = hl.parse_function("generator: gevrey c=2 alpha=0.5")
    fit = hl.gevrey_fit(coeffs)
    assert fit["c"] == pytest.approx(2, abs=1e-3)
    assert fit["alpha"] == pytest.approx(0.5, abs=1e-3)
    assert fit["verdict"] == "Member"


def test_parse_error_reports_position():
    with pytest.raises(hl.ParseError, match="column"):
        hl.parse_function("rational: num=[1] den=[1,-1]")


def test_domain_error_maps_to_library_error():
    with pytest.raises(hl.Error):
        hl.solve_mate(hl.PythagoreanPair(HALF_PLUS, HALF_MINUS), [0, 0, 1], 2)


def test_sanity_scenario_json_is_deterministic():
    first = hl.run_scenario(scenario="sanity")
    assert first == hl.run_scenario(scenario="sanity")
    report = json.loads(first)
    assert report["verdict"] == "PASS"
    assert list(report) == sorted(report)


def test_mate_linearity_from_ini_text():
    text = "[run]\nscenario = mate-linearity\n[mate-linearity]\ndim = 128\n"
    report = json.loads(hl.run_scenario(text))
    assert report["verdict"] == "PASS"
    assert report["inputs"]["dim"] == 128
