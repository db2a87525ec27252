import klb2
import pytest


def test_group_basics():
    assert klb2.length("1212") == 4
    assert klb2.canonical("2121") == klb2.canonical("1212")
    assert klb2.length("") == 0
    assert klb2.descents("12", "right") == [2]
    assert klb2.descents("12", "left") == [1]
    assert klb2.inverse("12") == "21"
    assert klb2.phi("2") == "2"
    assert klb2.bruhat_leq("212", "1212")
    assert not klb2.bruhat_leq("0", "1212")


def test_intervals_and_families():
    assert len(klb2.lower_interval("1212")) == 8
    assert klb2.theta(0, 0) == klb2.canonical("1212")
    tag = klb2.classify("120121")
    assert tag["family"] == "xbar" and tag["n"] == 6
    assert klb2.interval_size_formula(klb2.theta(4, 0)) == 200
    x6 = klb2.family_element("x", 6)
    assert sorted(klb2.coatom_formula(x6)) == sorted(klb2.coatoms(x6))
    assert [len(level) for level in klb2.ball(3)] == [1, 3, 5, 8]


def test_kl_polynomials():
    x9 = klb2.family_element("x", 9)
    xb6 = klb2.family_element("xbar", 6)
    assert klb2.h_poly(xb6, x9) == {1: 1, 3: 1}
    assert klb2.mu(xb6, x9) == 1
    assert klb2.mu(xb6, klb2.family_element("x", 15)) == 0
    assert klb2.h_xbar_x_closed(2, 5) == {3: 3, 5: 3, 7: 1, 9: 1}
    assert klb2.kl_basis("1") == {"": {1: 1}, "1": {0: 1}}


def test_closed_forms_match_recursion():
    w = klb2.big_element(2, 1, 1, 3)
    value, route, formula = klb2.kl_closed(w)
    assert route == "closed" and formula == "big"
    assert value == klb2.kl_basis(w)
    assert klb2.n_elem(klb2.theta(0, 0)) == klb2.kl_basis(klb2.theta(0, 0))


def test_verify_and_conjecture():
    report = klb2.verify("coatoms", 12)
    assert report["status"] == "ok"
    assert all(r["first_diff"] is None for r in report["records"])
    assert all(c["holds"] for c in klb2.thin_conjecture(1))
    assert "thin" in klb2.suite_names()


def test_svg_and_errors():
    svg = klb2.tessellate(2, "region")
    assert svg.startswith("<svg") and 'class="identity"' in svg
    with pytest.raises(ValueError):
        klb2.length("13")
    with pytest.raises(ValueError):
        klb2.family_element("q", 3)
    with pytest.raises(ValueError):
        klb2.coatom_formula(klb2.family_element("x", 3))
