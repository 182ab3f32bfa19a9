"""Band surfaces with vanishing Seifert form.

For a spatial theta- or K4-graph the band surface becomes canonical once each
band carries a prescribed number of half twists.  Those numbers are linear in
the signed crossing sums between pairs of edges.  This module computes them,
builds the boundary link (the associated link), and rescales the Jaeger and
Yamada polynomials into ambient isotopy invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import ONE, LaurentPolynomial, PhiFraction
from .diagram import (K4_EDGES, DiagramError, LinkDiagram, SpatialGraphDiagram, classify, delete_edges,
                      double, insert_half_twists, k4_cycles, writhe)
from .invariants import DEFAULT, StateSumConfig, jaeger, yamada

__all__ = [
    "TwistData", "AssociatedLink", "crossing_matrix", "twist_parameters", "associated_link",
    "f_coefficient", "normalized_jaeger", "normalized_yamada", "normalized_jaeger_knot",
    "cycle_writhe_relations", "twisted_parallel", "UnsupportedKind",
]


class UnsupportedKind(DiagramError):
    """The operation is defined only for other graph kinds."""


def _pair(i: str, j: str) -> tuple[str, str]:
    return (i, j) if i <= j else (j, i)


def _passage_sign(under_slot: int, over_slot: int) -> int:
    # positive: under enters at 0 and over at 3, or under at 2 and over at 1
    return 1 if (under_slot, over_slot) in ((0, 3), (2, 1)) else -1


def crossing_matrix(D: SpatialGraphDiagram) -> dict[tuple[str, str], int]:
    """w[(i, j)] = sum of crossing signs where edges i and j meet (i <= j).

    The matrix is returned as a mapping over sorted edge pairs, with every
    pair present (zeros included).  Use :func:`TwistData.entry` for
    symmetric lookups.
    """
    edges = D.edge_ids
    w = {_pair(i, j): 0 for i in edges for j in edges}
    for c, ps in D.passages_at().items():
        if len(ps) != 2:
            raise DiagramError(f"crossing {c!r} is not traversed exactly twice")
        (e1, s1), (e2, s2) = ps
        if s1 % 2 == s2 % 2:
            raise DiagramError(f"crossing {c!r} has both strands on the same level")
        (eu, su), (eo, so) = ((e1, s1), (e2, s2)) if s1 % 2 == 0 else ((e2, s2), (e1, s1))
        w[_pair(eu, eo)] += _passage_sign(su, so)
    return w


@dataclass(frozen=True)
class TwistData:
    kind: str
    edges: tuple[str, ...]
    w: Mapping[tuple[str, str], int]
    params: tuple[int, ...]

    def entry(self, i: str, j: str) -> int:
        return self.w[_pair(i, j)]

    def matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in self.edges] for i in self.edges]

    @property
    def by_edge(self) -> dict[str, int]:
        return dict(zip(self.edges, self.params))

    @property
    def total(self) -> int:
        return sum(self.params)

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": list(self.edges), "w": self.matrix(), "params": list(self.params)}


def _k4_params(w) -> tuple[int, ...]:
    def W(i, j):
        return w[_pair(f"a{i}", f"a{j}")]

    n1 = -2 * W(1, 1) - W(2, 3) - W(2, 5) + W(2, 1) + W(1, 3) + W(1, 5) + W(3, 6) - W(1, 6) + W(5, 6)
    n2 = -2 * W(2, 2) - W(2, 4) + W(1, 4) + W(4, 6) + W(2, 3) - W(1, 3) - W(3, 6) + W(1, 2) + W(2, 6)
    n3 = -2 * W(3, 3) + W(3, 4) - W(1, 4) + W(4, 5) + W(2, 3) + W(2, 5) - W(1, 2) + W(1, 3) - W(3, 5)
    n4 = -2 * W(4, 4) - W(2, 4) + W(3, 4) - W(4, 6) + W(3, 6) - W(2, 6) - W(4, 5) - W(2, 5) + W(3, 5)
    n5 = -2 * W(5, 5) - W(3, 5) + W(1, 5) - W(3, 6) + W(1, 6) - W(5, 6) - W(3, 4) + W(1, 4) - W(4, 5)
    n6 = -2 * W(6, 6) - W(1, 6) + W(2, 6) + W(2, 5) - W(1, 5) - W(5, 6) + W(2, 4) - W(1, 4) - W(4, 6)
    return (n1, n2, n3, n4, n5, n6)


def _theta_orientation(D: SpatialGraphDiagram) -> dict[str, int]:
    """+1 for edges running from the first vertex to the second, else -1."""
    verts, _ = D.abstract_graph()
    v1 = D.edges[D.edge_ids[0]].tail
    return {e: (1 if D.edges[e].tail == v1 else -1) for e in D.edge_ids}


def twist_parameters(D: SpatialGraphDiagram, kind: str | None = None) -> TwistData:
    """Half-twist counts that make the Seifert form of the band surface vanish.

    K4: the six n_i from the standard labels a1..a6.  Theta: the three m_i
    after orienting every edge from one vertex to the other (edges whose
    stored direction is reversed flip the sign of their mixed entries).
    Knot: the single band gets -2 times the writhe.
    """
    kind = kind or classify(D)
    if kind not in ("K4", "theta", "knot"):
        raise UnsupportedKind(f"twist parameters are defined for K4, theta and knot diagrams, not {kind!r}")
    w = crossing_matrix(D)
    edges = D.edge_ids
    if kind == "K4":
        return TwistData("K4", tuple(K4_EDGES), w, _k4_params(w))
    if kind == "theta":
        sigma = _theta_orientation(D)
        v = {k: sigma[k[0]] * sigma[k[1]] * x for k, x in w.items()}
        params = []
        for i in edges:
            j, k = [e for e in edges if e != i]
            params.append(-2 * v[_pair(i, i)] + v[_pair(i, j)] + v[_pair(i, k)] - v[_pair(j, k)])
        return TwistData("theta", edges, w, tuple(params))
    if len(edges) == 1:
        return TwistData("knot", edges, w, (-2 * sum(w.values()),))
    # several arcs of one cycle: put all twists on the first band
    return TwistData("knot", edges, w, (-2 * _knot_writhe(D),) + (0,) * (len(edges) - 1))


def _knot_writhe(D: SpatialGraphDiagram) -> int:
    """Writhe of a knot diagram given as a cycle of edges with 2-valent vertices."""
    # orient consistently along the cycle, then sum signs
    edges = list(D.edge_ids)
    sigma = {edges[0]: 1}
    at = D.edges[edges[0]].head
    start = D.edges[edges[0]].tail
    rest = set(edges[1:])
    while rest:
        nxt = next(e for e in rest if at in (D.edges[e].tail, D.edges[e].head))
        sigma[nxt] = 1 if D.edges[nxt].tail == at else -1
        at = D.edges[nxt].head if sigma[nxt] == 1 else D.edges[nxt].tail
        rest.remove(nxt)
    if at != start:
        raise DiagramError("edges do not close up into a cycle")
    w = crossing_matrix(D)
    return sum(sigma[i] * sigma[j] * x for (i, j), x in w.items())


def f_coefficient(n: int) -> LaurentPolynomial:
    """f_n = A^(n-2) (1 - (-A^-4)^n) / (1 + A^-4), always a Laurent polynomial."""
    x = LaurentPolynomial({-4: -1})
    num = (ONE - x ** n).shift(n - 2)
    q, r = num.divmod(LaurentPolynomial({0: 1, -4: 1}))
    if not r.is_zero():
        raise ArithmeticError(f"f_{n} is not a Laurent polynomial")
    return q


@dataclass(frozen=True)
class AssociatedLink:
    link: LinkDiagram
    twist: TwistData
    half_twists: Mapping[str, int] = field(default_factory=dict)

    @property
    def writhe(self) -> int:
        return writhe(self.link)


def twisted_parallel(D: SpatialGraphDiagram, half_twists: Mapping[str, int]) -> LinkDiagram:
    """The blackboard band boundary with the given half twists per band."""
    L = double(D)
    for e in sorted(half_twists):
        L = insert_half_twists(L, e, half_twists[e])
    if L.heads is None:
        raise DiagramError("twisted band surface is not orientable")
    return L


def associated_link(D: SpatialGraphDiagram, twist: TwistData | None = None) -> AssociatedLink:
    """Boundary of the zero-form band surface; its writhe is minus the total twist."""
    twist = twist or twist_parameters(D)
    counts = twist.by_edge
    L = twisted_parallel(D, counts)
    out = AssociatedLink(L, twist, counts)
    w = out.writhe
    if w != -twist.total:
        raise AssertionError(f"associated link writhe {w} != {-twist.total}")
    return out


def _kind_for_normalization(D: SpatialGraphDiagram) -> str:
    kind = classify(D)
    if kind not in ("K4", "theta", "knot"):
        raise UnsupportedKind(f"no normalization for kind {kind!r}")
    return kind


def normalized_jaeger(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> PhiFraction:
    """(-A^4)^(total twist) times the Jaeger polynomial."""
    kind = _kind_for_normalization(D)
    t = twist_parameters(D, kind).total
    return jaeger(D, config) * LaurentPolynomial.monomial(4 * t, (-1) ** (t % 2))


def normalized_yamada(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """(-A)^(total twist) times the Yamada polynomial."""
    kind = _kind_for_normalization(D)
    t = twist_parameters(D, kind).total
    return yamada(D, config) * LaurentPolynomial.monomial(t, (-1) ** (t % 2))


def normalized_jaeger_knot(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> PhiFraction:
    """A^(-8 w) times the Jaeger polynomial of a knot diagram of writhe w."""
    if classify(D) != "knot":
        raise UnsupportedKind("normalized_jaeger_knot needs a knot diagram")
    return jaeger(D, config) * LaurentPolynomial.monomial(-8 * _knot_writhe(D))


def cycle_writhe_relations(D: SpatialGraphDiagram) -> list[dict]:
    """For each cycle c: twice the writhe of c against minus its twist total.

    A vanishing Seifert form means every cycle has surface framing zero,
    i.e. 2 w(c) + sum of twists along c = 0.
    """
    kind = classify(D)
    td = twist_parameters(D, kind)
    counts = td.by_edge
    if kind == "K4":
        cycles = k4_cycles()
    elif kind == "theta":
        e = D.edge_ids
        cycles = [frozenset(e) - {x} for x in e]
    else:
        raise UnsupportedKind(f"no cycle relations for kind {kind!r}")
    out = []
    for c in cycles:
        K = delete_edges(D, c)
        w = _knot_writhe(K)
        s = sum(counts[e] for e in c)
        out.append({"cycle": sorted(c), "twice_writhe": 2 * w, "minus_twist": -s, "holds": 2 * w == -s})
    return out
