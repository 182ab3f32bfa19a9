import pytest

from conftest import OMEGAS, diagram
from sgpoly.algebra import A, LaurentPolynomial, parse_polynomial
from sgpoly.diagram import double, insert_half_twists, turnback
from sgpoly.invariants import bracket, jaeger, jones, yamada
from sgpoly.surfaces import (UnsupportedKind, associated_link, crossing_matrix, cycle_writhe_relations,
                             f_coefficient, normalized_jaeger, normalized_yamada, twist_parameters,
                             twisted_parallel)

PARAMS = {
    "omega1": (0, 0, 0, 0, 0, 0),
    "omega2": (-3, 0, 3, -3, 0, 3),
    "omega3": (-1, -1, -1, 2, 2, 2),
    "omega4": (0, 0, -3, 3, 3, 0),
    "omega5": (0, 0, 0, 0, 0, 6),
    "omega6": (2, -1, -3, 2, -1, -1),
    "omega7": (-2, 0, 0, 2, 0, 0),
    "omega8": (2, -1, -1, 2, -1, -1),
    "omega9": (2, 0, 0, 0, 0, 0),
    "omega10": (0, 0, 0, 0, 0, 0),
}


@pytest.mark.parametrize("name", OMEGAS)
def test_k4_twist_parameters(name):
    assert twist_parameters(diagram(name)).params == PARAMS[name]


@pytest.mark.parametrize("name", OMEGAS + ["theta-tilde", "theta-planar"])
def test_every_cycle_has_surface_framing_zero(name):
    for row in cycle_writhe_relations(diagram(name)):
        assert row["holds"], row


def test_crossing_matrix_is_symmetric_lookup():
    td = twist_parameters(diagram("omega7"))
    M = td.matrix()
    assert M == [list(r) for r in zip(*M)]
    assert td.entry("a3", "a2") == td.entry("a2", "a3") == 1
    assert sum(crossing_matrix(diagram("omega1")).values()) == 0


def test_theta_twists():
    assert twist_parameters(diagram("theta-tilde")).params == (0, 0, 2)
    assert twist_parameters(diagram("theta-planar")).params == (0, 0, 0)


def test_knot_twist_is_minus_twice_writhe():
    assert twist_parameters(diagram("unknot-kink")).params in ((2,), (-2,))
    assert twist_parameters(diagram("figure-eight")).params == (0,)


def test_unsupported_kind():
    with pytest.raises(UnsupportedKind):
        normalized_jaeger(diagram("hopf"))
    with pytest.raises(UnsupportedKind):
        twist_parameters(diagram("hopf"))


@pytest.mark.parametrize("n,expected", [(-3, "A^7-A^3+A^-1"), (-2, "1-A^4"), (-1, "A"), (0, "0"),
                                        (1, "A^-1"), (2, "1-A^-4"), (3, "A-A^-3+A^-7")])
def test_f_coefficients(n, expected):
    assert f_coefficient(n) == parse_polynomial(expected)


def test_twist_expansion_on_a_theta_band():
    L = double(diagram("theta-planar"))
    b0, binf = bracket(L), bracket(turnback(L, "e2"))
    for n in range(-4, 5):
        bn = bracket(insert_half_twists(L, "e2", n))
        assert bn == LaurentPolynomial.monomial(n) * b0 + f_coefficient(n) * binf


@pytest.mark.parametrize("name", OMEGAS)
def test_associated_link_writhe_and_components(name):
    al = associated_link(diagram(name))
    assert al.writhe == -sum(al.twist.params)
    assert al.link.num_components() == 4


def test_odd_theta_twists_give_a_punctured_torus():
    # every cycle carries two half twists, so the surface is orientable; Euler
    # characteristic -1 with one boundary curve means genus one
    L = twisted_parallel(diagram("theta-planar"), {"e1": 1, "e2": 1, "e3": 1})
    assert L.num_components() == 1


def test_mixed_parity_on_theta_is_rejected():
    with pytest.raises(Exception):
        twisted_parallel(diagram("theta-planar"), {"e1": 1, "e2": 0, "e3": 0})


def test_planar_k4_associated_link_is_trivial():
    V = jones(associated_link(diagram("omega1")).link)
    assert V == (-(A ** 2) - A ** -2) ** 3


def test_normalization_is_trivial_when_twists_cancel():
    D = diagram("omega7")
    assert normalized_jaeger(D) == jaeger(D)
    assert normalized_yamada(D) == yamada(D)
