from fractions import Fraction

import pytest

import pwrot


@pytest.fixture
def golden():
    return pwrot.field("4/5")


def test_field(golden):
    assert golden.q == 5
    assert golden.conductor == 20
    assert golden.degree == 8
    assert pwrot.make_field(11, 12).alpha == "11/12"
    with pytest.raises(ValueError):
        pwrot.make_field(4, 6)


def test_orbit_of_q(golden):
    q = pwrot.parse_point(golden, "Q")
    pts = pwrot.orbit(q, 10)
    assert len(pts) == 11
    assert pts[10] == pwrot.parse_point(golden, "phi")
    assert pts[3].is_real()
    assert pts[4].format("golden") == "1/2 + (-1/2*phi)*sqrt(2+phi)*i"
    assert pwrot.inverse_step(pwrot.step(pts[5])) == pts[5]
    assert [n for n, _ in pwrot.q_orbit_returns(220)][-1] == 220


def test_arithmetic(golden):
    a = pwrot.point(golden, Fraction(1, 2), -3)
    b = pwrot.element(golden, [1, Fraction(2, 4)])
    assert (a + b) - b == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert b.coeffs[:2] == [Fraction(1), Fraction(1, 2)]
    assert complex(a) == pytest.approx(0.5 - 3j)
    assert {a: 1}[pwrot.point(golden, "1/2", "-3")] == 1


def test_periods_and_tiles(golden):
    rows = pwrot.pentagon_center_periods(3)
    assert [r["period"] for r in rows] == [1, 7, 38, 232]
    t = pwrot.tile_from_seed(pwrot.parse_point(golden, "P1"))
    assert (t.ell, t.k, t.sides) == (7, 5, 5)
    assert t.regular
    assert len(t.images()) == 8
    assert all(c["pass"] for c in pwrot.verify_tile(t))
    assert pwrot.minimal_period(t.center, 100)["period"] == 7


def test_hexagon():
    f = pwrot.field("11/12")
    t = pwrot.tile_from_seed(pwrot.parse_point(f, "C"))
    assert (t.ell, t.k, t.sides, t.regular) == (20, 3, 6, False)
    assert all(c["pass"] for c in pwrot.hexagon_case())


def test_scan_and_critical(golden):
    rep = pwrot.scan(golden, (-1, -1, 1, 1), "1/2", 20000)
    assert rep["samples"] == 25
    assert rep["tiles"]
    bundle = pwrot.critical(golden, 3, pwrot.box("-3,-3,3,3"), "pullback")
    assert len(bundle["pullback"]) == 4
    assert not bundle["forward"]
    a, b, direction = bundle["pullback"][1]["segments"][0]
    mid = pwrot.element(golden, [Fraction(1, 2)]) * (a + b)
    assert pwrot.step(mid).is_real()


def test_errors(golden):
    with pytest.raises(pwrot.ParseError) as info:
        pwrot.parse_point(golden, "1 + foo")
    assert info.value.position == 4
    with pytest.raises(pwrot.CriticalLineHit) as hit:
        pwrot.tile_from_seed(pwrot.parse_point(golden, "Q"))
    assert hit.value.index == 0
    with pytest.raises(pwrot.BudgetExceeded):
        pwrot.tile_from_seed(pwrot.parse_point(golden, "P4"), 100)
    with pytest.raises(pwrot.DomainError):
        pwrot.step(pwrot.point(golden, 1, 1)) + pwrot.point(pwrot.field("1/3"), 0, 0)
