import json
import random

import networkx as nx
import pytest

from conftest import OMEGAS, THETAS, diagram
from sgpoly.algebra import A
from sgpoly.catalog import names
from sgpoly.diagram import (DiagramError, LinkDiagram, SpatialGraphDiagram, classify, delete_edges,
                            disjoint_union, double, from_dict, insert_half_twists, knot_from_pd, link_from_pd,
                            load_json, mirror, orient, resolve_state, to_dict, validate, writhe)
from sgpoly.invariants import bracket, yamada


@pytest.mark.parametrize("name", names())
def test_json_round_trip(name):
    D = diagram(name)
    again = from_dict(json.loads(json.dumps(to_dict(D))))
    assert to_dict(again) == to_dict(D)
    assert validate(again) == []


def test_classification():
    assert {classify(diagram(n)) for n in OMEGAS} == {"K4"}
    assert {classify(diagram(n)) for n in THETAS} == {"theta"}
    assert classify(diagram("trefoil")) == "knot"
    assert classify(diagram("hopf")) == "link"


@pytest.mark.parametrize("name,components", [("omega1", 4), ("omega7", 4), ("omega2", 2),
                                             ("theta-planar", 3), ("theta-tilde", 3), ("trefoil", 2)])
def test_double_component_count(name, components):
    # omega2 is drawn with a rotation system whose blackboard surface has two boundary curves
    L = double(diagram(name))
    assert L.num_components() == components
    assert L.num_crossings() == 4 * len(diagram(name).crossings)


def test_double_is_band_antiparallel_with_zero_writhe_on_planar_graphs():
    for name in ("omega1", "theta-planar", "unknot"):
        assert writhe(double(diagram(name))) == 0


def test_full_twist_on_planar_theta_band_changes_writhe_by_two():
    L = double(diagram("theta-planar"))
    assert writhe(insert_half_twists(L, "e1", 2)) == -2
    assert writhe(insert_half_twists(L, "e1", -2)) == 2


def test_mirror_inverts_yamada():
    for name in ("omega7", "theta-tilde", "trefoil"):
        D = diagram(name)
        assert yamada(mirror(D)) == yamada(D).substitute_power(-1)


def test_disjoint_union_multiplies_bracket_by_loop_factor():
    H = diagram("hopf")
    U = disjoint_union(H, H)
    assert bracket(U) == bracket(H) ** 2 * (-(A ** 2) - A ** -2)


def test_delete_edges_gives_cycles():
    D = diagram("omega7")
    K = delete_edges(D, ["a2", "a3", "a5", "a6"])
    assert classify(K) == "knot"
    assert len(K.crossings) == 4


def test_link_from_pd_orientation_and_writhe():
    assert writhe(link_from_pd([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)])) in (3, -3)
    assert writhe(link_from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])) == 0
    H = link_from_pd([(4, 1, 3, 2), (2, 3, 1, 4)])
    assert H.num_components() == 2
    assert abs(writhe(H)) == 2


def test_knot_from_pd_rejects_links():
    with pytest.raises(DiagramError):
        knot_from_pd([(4, 1, 3, 2), (2, 3, 1, 4)])


def test_orient_gives_every_arc_a_head():
    L = orient(LinkDiagram(double(diagram("omega7")).nodes))
    assert L.heads is not None and set(L.heads) == set(L.endpoints())


def test_slot_reuse_is_reported():
    with pytest.raises(DiagramError) as err:
        SpatialGraphDiagram.build({"v": ["k>", "k<"]}, {"k": ("v", "v", [("x", 0), ("x", 0)])})
    assert "slot reuse" in str(err.value) or "listed twice" in str(err.value)


def test_loader_reports_line_numbers(tmp_path):
    data = to_dict(diagram("theta-planar"))
    data["arcs"][1] = [["v1", 1], ["v2", 7]]
    text = json.dumps(data, indent=1)
    with pytest.raises(DiagramError) as err:
        load_json(text)
    assert "line" in str(err.value)


def test_loader_rejects_broken_json():
    with pytest.raises(DiagramError) as err:
        load_json('{"nodes": [}')
    assert "line 1" in str(err.value)


def _nx_counts(nv, edges):
    G = nx.MultiGraph()
    G.add_nodes_from(range(nv))
    G.add_edges_from(edges)
    comps = nx.number_connected_components(G)
    return comps, G.number_of_edges() - nv + comps


@pytest.mark.parametrize("name", ["omega7", "theta-tilde", "figure-eight", "omega3"])
def test_resolved_state_counts_match_networkx(name):
    code = diagram(name).planar()
    rng = random.Random(7)
    ids = [c.id for c in code.crossings]
    for _ in range(40):
        r = resolve_state(code, {c: rng.choice((1, -1, 0)) for c in ids})
        assert (r.omega, r.beta) == _nx_counts(r.num_vertices, r.edges)
