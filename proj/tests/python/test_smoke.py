import json
from fractions import Fraction

import pytest

import refdyn


def test_reproduce_general():
    rep = refdyn.reproduce("general", n=5)
    assert rep["outputs"]["tuple"] == "(1, 32, 32, 32, 1)"
    assert rep["passed"]
    assert refdyn.degree_tuple_generic(4) == ["16", "16", "16"]


def test_conic_line_growth():
    m = [[0, 1, 0], [-3, 0, 5], [-4, 0, 6]]
    g = refdyn.dominant_growth(m, [0, 0, 1])
    assert g["hypotheses_hold"]
    assert refdyn.poly_fractions(g["factor"]) == [Fraction(-2), Fraction(-5), Fraction(1)]
    lo, hi = g["value"]["enclosure"]
    assert lo.startswith("5.372281323") and hi.startswith("5.372281323")
    deltas = [v[2] for v in refdyn.iterate("conic-line", [0, 0, 1], 4)]
    assert deltas == [1, 6, 36, 196, 1056]


def test_big_integers_survive():
    v = refdyn.iterate("conic-line", [0, 0, 1], 60)[-1]
    assert all(isinstance(x, int) for x in v)
    assert v[2] > 2**63


def test_triangle_polynomials():
    p = [[3, 1, 1, -3, -2, 0], [2, 2, 1, -3, -2, 0], [2, 1, 2, -3, -2, 0],
         [0, 0, 0, 0, 0, 0], [1, 0, 1, -1, -1, 0], [1, 1, 1, -2, -1, 0]]
    assert refdyn.poly_fractions(refdyn.char_poly(p)) == [0, 0, -1, -2, 8, -6, 1]
    assert refdyn.poly_fractions(refdyn.minimal_poly(p)) == [0, 1, 3, -5, 1]
    assert refdyn.verify_minimal_pairs(60)["all_match"]


def test_elliptic_and_billiards():
    assert refdyn.avoidance_check(4, 500)["passed"]
    cfg = refdyn.billiard_configuration(7)
    assert cfg["seed"] == 7
    assert refdyn.check_configuration(0)["status"] == "success"
    assert refdyn.search_configuration(0, 10) == (0, 1)
    assert refdyn.search_configuration(3, 3) is None


def test_cli_and_errors():
    code, out, err = refdyn.run_cli(["elliptic", "check", "--n", "4", "--horizon", "500"])
    assert code == 0 and json.loads(out)["passed"]
    code, _, err = refdyn.run_cli(["elliptic", "check", "--n", "2"])
    assert code == 2 and "N >= 3" in err
    with pytest.raises(refdyn.RefdynError):
        refdyn.avoidance_check(2, 10)
    with pytest.raises(ValueError):
        refdyn.iterate("nope", [1], 1)
