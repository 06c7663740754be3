import math

import pytest

import branch2


def test_slope_word():
    assert branch2.slope_word("2/3") == "T S T^3 S"
    assert branch2.slope_word("inf") == "1"
    assert branch2.slope_word("-1/3") == "S T^3 S"
    with pytest.raises(ValueError):
        branch2.slope_word("not a slope")


def test_tangle():
    assert branch2.twist_vector("5/2") == "(2, 3)"
    assert branch2.two_bridge_determinant("7/4") == 7
    assert branch2.two_bridge_determinant("-3") == 3
    assert branch2.two_bridge_diagram_text("3").count("X ") == 3


def test_surgery():
    hopf = "components: 2\na 1 unknotted\nb 4 unknotted\n0 1\n1 0\n"
    assert branch2.link_h1(hopf) == "3"
    twisted = branch2.rolfsen_twist(hopf, 0, 1)
    assert "a 1/2 unknotted" in twisted
    assert branch2.link_h1(twisted) == "3"
    one = "components: 1\nk 1 unknotted\n0\n"
    assert branch2.blow_down(one, 0) == "components: 0\n"
    with pytest.raises(ValueError):
        branch2.link_h1("garbage")


def test_seifert():
    assert branch2.quotient_invariants(3, 5, "1") == "{0,(Oo,0),(3,4),(5,-2),(1,1)}"
    assert branch2.quotient_h1(3, 5, "1") == 13
    trefoil = "{1,(Oo,0),(-2,1),(-3,1),(-11,2)}"
    assert branch2.seifert_h1(trefoil) == "1"
    assert branch2.euler_number(trefoil) == "1/66"


def test_involution():
    r = branch2.extend_involution("S1E", "1", quotient_knot="3_1")
    assert r["extends"]
    assert r["quotient"] == "3_1(1/2)"
    assert r["known_not_s3"]
    assert not branch2.extend_involution("S0S0", "1/1")["extends"]
    assert branch2.cyclic_quotient_coefficient("3/5", 2) == "3/10"


def test_census():
    report = branch2.census_report("10_98", "1")
    assert report["quotients"] == ["3_1(1/2)"]
    assert report["known_not_s3"] == [True]
    assert branch2.census_report("9_32", "1/5")["quotients"] == []
    names = branch2.census_knots()
    assert len(names) == 243
    assert "10_98" in names
    with pytest.raises(ValueError):
        branch2.census_report("no_such_knot", "1")


def test_hyperbolic():
    assert math.isclose(branch2.core_geodesic_length(2, 3), 2 * math.pi / 13)
    first, second = branch2.filling_residuals(100.0)
    assert second < 1e-9
    assert 0 < first < 0.1
    with pytest.raises(ValueError):
        branch2.core_geodesic_length(2, 4)
