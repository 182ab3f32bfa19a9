import pytest

from conftest import diagram
from sgpoly.algebra import PhiFraction
from sgpoly.relations import (KindMismatch, constituent_knots, constituent_thetas, verify_bar_expansion,
                              verify_k4_jones_formula, verify_knot_normalization, verify_main_theorem,
                              verify_theta_jones_formula, verify_theta_theorem)


def test_report_serializes():
    rep = verify_main_theorem(diagram("omega1"))
    data = rep.to_json()
    assert data["equal"] is True and data["identity"] == "main"
    assert PhiFraction.from_json(data["lhs"]) == rep.lhs
    assert set(data["terms"]["thetas"]) == {f"a{i}" for i in range(1, 7)}
    assert "equal" in str(rep)


def test_constituents_of_a_k4():
    D = diagram("omega7")
    assert sorted(constituent_thetas(D)) == [f"a{i}" for i in range(1, 7)]
    assert len(constituent_knots(D)) == 7


def test_constituents_of_a_theta():
    assert sorted(constituent_knots(diagram("theta-tilde"))) == ["e1|e2", "e1|e3", "e2|e3"]


@pytest.mark.parametrize("fn,name", [(verify_main_theorem, "theta-planar"), (verify_theta_theorem, "omega1"),
                                     (verify_knot_normalization, "omega1"), (verify_bar_expansion, "trefoil")])
def test_kind_mismatch(fn, name):
    with pytest.raises(KindMismatch):
        fn(diagram(name))


def test_theta_expansion_holds_for_any_admissible_twists():
    assert verify_theta_jones_formula(diagram("theta-planar"), params=(2, 0, 0)).equal
    assert verify_theta_jones_formula(diagram("theta-tilde"), params=(-1, 1, 3)).equal


def test_k4_jones_formula_on_nonplanar_example():
    assert verify_k4_jones_formula(diagram("omega3")).equal


def test_knot_side_check_is_reported():
    rep = verify_knot_normalization(diagram("trefoil"))
    assert rep.side_checks == {"jaeger = <K2> + 1/phi": True}
    assert rep.equal
