import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import diagram
from sgpoly.algebra import LaurentPolynomial, PhiFraction, parse_fraction, parse_polynomial
from sgpoly.diagram import double, link_from_pd, mirror
from sgpoly.invariants import (CapExceeded, StateSumConfig, bracket, h_polynomial, h_polynomial_subsets,
                               jaeger, jones, kauffman_bracket, kauffman_bracket_skein, yamada)

P = parse_polynomial

TREFOIL = [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]
FIGURE8 = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]


def test_hopf_bracket():
    assert kauffman_bracket(diagram("hopf")) == P("-A^4-A^-4")


def test_trefoil_bracket_is_chiral():
    b = kauffman_bracket(link_from_pd(TREFOIL))
    assert b in (P("-A^5-A^-3+A^-7"), P("-A^-5-A^3+A^7"))
    assert kauffman_bracket(mirror(link_from_pd(TREFOIL))) == b.substitute_power(-1)


def test_figure_eight_jones_is_symmetric():
    V = jones(link_from_pd(FIGURE8))
    assert V == V.substitute_power(-1)
    assert V == P("A^8-A^4+1-A^-4+A^-8")


def test_unknot_and_planar_theta_yamada():
    assert yamada(diagram("unknot")) == P("A+1+A^-1")
    assert yamada(diagram("theta-planar")) == P("-A^2-A-2-A^-1-A^-2")
    assert yamada(diagram("theta-tilde")) == P("A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8")


def test_jaeger_reference_values():
    assert jaeger(diagram("unknot")) == PhiFraction(P("-A^2-A^-2")) + PhiFraction(1, 1)
    assert jaeger(diagram("theta-planar")) == parse_fraction("(A^8+A^4+2+A^-4+A^-8)/phi^2")


def test_every_arc_bars_agree_with_one_bar_per_band():
    # 2^(number of arcs) bar resolutions, so keep the diagrams small
    for name in ("trefoil", "omega1-kink", "theta-planar"):
        D = diagram(name)
        assert jaeger(D, every_arc=True) == jaeger(D)


def test_workers_and_numba_path_agree():
    L = double(diagram("omega7"))
    one = kauffman_bracket(L, StateSumConfig(workers=1))
    assert kauffman_bracket(L, StateSumConfig(workers=4)) == one
    assert kauffman_bracket_skein(L) == one


def test_caps_raise():
    L = double(diagram("omega7"))
    with pytest.raises(CapExceeded):
        kauffman_bracket(L, StateSumConfig(bracket_cap=8))
    with pytest.raises(CapExceeded):
        kauffman_bracket_skein(L, StateSumConfig(skein_cap=8))
    with pytest.raises(CapExceeded):
        yamada(diagram("omega7"), StateSumConfig(yamada_cap=2))


def test_dispatch_uses_skein_above_threshold():
    L = double(diagram("omega2"))
    cfg = StateSumConfig(auto_threshold=4, bracket_cap=4)
    assert bracket(L, cfg) == kauffman_bracket(L)


def random_pd(rng, n):
    """A random closed 4-valent diagram code (not necessarily planar-realizable, which the bracket ignores)."""
    ends = list(range(1, 2 * n + 1)) * 2
    rng.shuffle(ends)
    return [tuple(ends[4 * i:4 * i + 4]) for i in range(n)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10 ** 6))
def test_state_sum_equals_skein_on_random_codes(n, seed):
    rng = random.Random(seed)
    from sgpoly.diagram import LinkDiagram, Node
    nodes = tuple(Node(f"x{i}", "crossing", X) for i, X in enumerate(random_pd(rng, n)))
    L = LinkDiagram(nodes)
    assert kauffman_bracket(L) == kauffman_bracket_skein(L)


def _nx_h(nv, edges):
    """Reference h(G) = sum over spanning subgraphs of (-1)^omega y^beta, using networkx."""
    acc = {}
    m = len(edges)
    for mask in range(1 << m):
        G = nx.MultiGraph()
        G.add_nodes_from(range(nv))
        G.add_edges_from(e for i, e in enumerate(edges) if not mask >> i & 1)
        w = nx.number_connected_components(G)
        b = G.number_of_edges() - nv + w
        acc[b] = acc.get(b, 0) + (-1) ** w
    return LaurentPolynomial(acc)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=6))
def test_h_polynomial_three_ways(nv, raw):
    edges = [(u % nv, v % nv) for u, v in raw]
    ref = _nx_h(nv, edges)
    assert h_polynomial_subsets(nv, edges) == ref
    assert h_polynomial(nv, edges) == ref


def test_yamada_is_unit_invariant_under_kink():
    y, yk = yamada(diagram("unknot")), yamada(diagram("unknot-kink"))
    assert y.unit_equivalent(yk) not in (None, 0)


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("SGPOLY_WORKERS", "3")
    assert StateSumConfig.from_env().workers == 3
    monkeypatch.setenv("SGPOLY_WORKERS", "0")
    assert StateSumConfig.from_env().workers == 1
