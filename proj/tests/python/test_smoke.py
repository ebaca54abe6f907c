"""Smoke tests for the python bindings."""

import padicore as pc


def test_valuations():
    assert pc.vp(48, 2) == 4
    assert pc.vp(24, 2) == 3
    assert pc.vp(0, 3) is None
    assert pc.p_free_part(144, 2) == 9
    assert pc.p_free_part(-2, 3) == -2


def test_zx():
    assert pc.discriminant("x^5+x^2+1") == 3233
    assert pc.discriminant("x^2+5x+6") == 1
    assert pc.resultant("x^2-2", "x^2-3") == 1
    assert pc.is_irreducible("x^5-53") == "yes"
    assert pc.is_irreducible("x^5+x^2") == "no"
    assert pc.count_monic_irreducibles(3, 2) == 3


def test_polygon_report():
    rep = pc.polygon_report("x^5+3x^2+144", "x", 2)
    assert rep["ind_phi"] == 2
    assert rep["polygon"]["principal_sides"][0]["slope"] == "-2"
    assert pc.phi_expand("x^5+3x^2+144", "x", 2)[0] == "144"
    assert pc.phi_index("x^5+3x^2+144", "x", 2) == 2


def test_ore_and_verdicts():
    assert pc.dedekind_divides_index("x^5+3x^2+144", 2)
    assert not pc.dedekind_divides_index("x^5-53", 2)
    rep = pc.ore_report("x^5-53", 3)
    assert rep["p_regular"] and rep["index_lower_bound"] == 0
    v = pc.index_divisor("x^5+3x^2+144", 2)
    assert v["divides"] == "yes" and v["witness_f"] == 1
    r = pc.regularize("x^5+3x^2+144", 2, 0)
    assert r["ok"] and r["s"] % 2 == 0


def test_quintic_pipeline():
    v = pc.quintic(3, 144)
    assert v["irreducible"] and v["consistent"]
    assert v["p2"]["condition"] == "2.1" and v["p2"]["engine"] == "yes"
    assert pc.quintic(0, 1)["irreducible"] is False


def test_families():
    mono = pc.families_mono(3, 1, 2, 2, 1, 1, 1)
    assert mono["eisenstein_at_p"] and mono["vp_const"] == 1
    assert mono["theta_min_poly"] == "x^3+6*x^2+9*x-3"
    assert pc.theta_minpoly("x^2-2", 1, 0, 2) == "x^2-2"
    dpr = pc.families_dpr(3, 3, 1, 81, 80)
    assert dpr["common_index_divisor"] and dpr["P1"] == 4


def test_scan():
    res = pc.scan(-5, 5, -5, 5, jobs=2)
    assert res["report"]["summary"]["inconsistent"] == 0
    assert res["csv"].startswith("a,b,irreducible")
    assert res["ledger"] == ""
