"""Planar codes for spatial graph diagrams and link diagrams.

Conventions used throughout the package:

* A node has slots numbered counterclockwise.  At a crossing, slots 0 and 2
  carry the understrand and slots 1 and 3 the overstrand.
* A :class:`SpatialGraphDiagram` stores each oriented edge as a path: it leaves
  its tail vertex from ``tail_slot``, enters crossings at the listed slots
  (leaving at the opposite slot), and arrives at ``head_slot`` of its head.
* A :class:`LinkDiagram` is an arc-labelled code: every node lists the arc
  label at each slot, and each label occurs at exactly two slots.  Besides
  crossings it may contain 2-valent ``joint`` nodes, which are invisible to
  every invariant; doubled diagrams use them to mark the start of each band.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Node",
    "EdgePath",
    "SpatialGraphDiagram",
    "LinkDiagram",
    "PlanarCode",
    "BarDiagram",
    "DiagramError",
    "validate",
    "classify",
    "resolve_state",
    "ResolvedState",
    "smooth",
    "delete_edges",
    "double",
    "bar_diagram",
    "insert_half_twists",
    "turnback",
    "orient",
    "writhe",
    "crossing_sign",
    "crossing_signs",
    "mirror",
    "disjoint_union",
    "as_link",
    "knot_from_pd",
    "link_from_pd",
    "k4_cycles",
    "k4_thetas",
    "K4_EDGES",
    "load_json",
    "dump_json",
    "from_dict",
    "to_dict",
]

Endpoint = tuple[str, int]

K4_EDGES = ("a1", "a2", "a3", "a4", "a5", "a6")


class DiagramError(ValueError):
    """Raised for malformed diagram codes."""

    def __init__(self, violations: Sequence[str] | str):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# ---------------------------------------------------------------------------
# arc-labelled codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    id: str
    kind: str  # "vertex" | "crossing" | "joint"
    arcs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class PlanarCode:
    """Bare arc-labelled code: the common substrate of all state sums."""

    nodes: tuple[Node, ...]
    free_loops: int = 0

    def node(self, nid: str) -> Node:
        for n in self.nodes:
            if n.id == nid:
                return n
        raise KeyError(nid)

    def endpoints(self) -> dict[int, list[Endpoint]]:
        ends: dict[int, list[Endpoint]] = defaultdict(list)
        for n in self.nodes:
            for s, a in enumerate(n.arcs):
                ends[a].append((n.id, s))
        return ends

    @property
    def crossings(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind == "crossing")

    @property
    def vertices(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind == "vertex")

    def check(self) -> list[str]:
        out = []
        ids = Counter(n.id for n in self.nodes)
        out += [f"duplicate node id {i!r}" for i, c in ids.items() if c > 1]
        for n in self.nodes:
            if n.kind == "crossing" and n.degree != 4:
                out.append(f"crossing {n.id!r} has {n.degree} slots")
            if n.kind == "joint" and n.degree != 2:
                out.append(f"joint {n.id!r} has {n.degree} slots")
            if n.kind not in ("vertex", "crossing", "joint"):
                out.append(f"node {n.id!r} has unknown kind {n.kind!r}")
        for a, e in self.endpoints().items():
            if len(e) != 2:
                out.append(f"arc {a} has {len(e)} endpoints (slot reuse)" if len(e) > 2
                           else f"arc {a} has a dangling end at {e[0]}")
        if self.free_loops < 0:
            out.append("negative free loop count")
        return out


@dataclass(frozen=True)
class LinkDiagram(PlanarCode):
    """Crossings (plus joints and free loops), optionally oriented.

    ``heads`` maps each arc label to the endpoint where the arc ends.
    ``ports`` maps a band name to its (left, right) joints; ``bands`` maps a
    band name to the node-side endpoints of its two strands, which is what
    the orientation rule for band boundaries needs.
    """

    heads: Mapping[int, Endpoint] | None = None
    ports: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    bands: Mapping[str, tuple[Endpoint, Endpoint]] = field(default_factory=dict)

    @property
    def oriented(self) -> bool:
        return self.heads is not None

    def num_crossings(self) -> int:
        return sum(1 for n in self.nodes if n.kind == "crossing")

    def components(self) -> list[list[int]]:
        """Arc labels of each component, in traversal order."""
        return [c for c, _ in _traverse(self)]

    def num_components(self) -> int:
        return len(self.components()) + self.free_loops


@dataclass(frozen=True)
class BarDiagram:
    """A doubled diagram whose bands each carry one bar at the band start."""

    base: LinkDiagram
    bars: Mapping[str, int]


# ---------------------------------------------------------------------------
# spatial graph diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgePath:
    tail: str
    tail_slot: int
    passages: tuple[tuple[str, int], ...]
    head: str
    head_slot: int

    def reversed(self) -> "EdgePath":
        return EdgePath(self.head, self.head_slot,
                        tuple((c, (s + 2) % 4) for c, s in reversed(self.passages)),
                        self.tail, self.tail_slot)


@dataclass(frozen=True)
class SpatialGraphDiagram:
    vertices: Mapping[str, int]
    crossings: tuple[str, ...]
    edges: Mapping[str, EdgePath]
    free_loops: int = 0
    name: str = ""

    # -- convenience -----------------------------------------------------------
    @classmethod
    def build(cls, vertices: Mapping[str, Sequence[str]], edges: Mapping[str, tuple],
              free_loops: int = 0, name: str = "") -> "SpatialGraphDiagram":
        """Build from vertex rotations and edge routes.

        ``vertices[v]`` lists the edge ends at ``v`` counterclockwise; a name
        may carry a suffix ``>`` (edge leaves here) or ``<`` (edge arrives
        here), needed only for loops.  ``edges[e] = (tail, head, passages)``
        where passages is a list of ``(crossing, entry_slot)``.
        """
        slot_of: dict[tuple[str, str], tuple[str, int]] = {}
        for v, ends in vertices.items():
            for s, raw in enumerate(ends):
                nm, role = raw.rstrip("<>"), raw[len(raw.rstrip("<>")):]
                if not role:
                    tail, head, _ = edges[nm]
                    if tail == head:
                        raise DiagramError(f"loop {nm!r} at {v!r} needs an explicit '<' or '>'")
                    role = ">" if tail == v else "<"
                key = (nm, role)
                if key in slot_of:
                    raise DiagramError(f"edge end {raw!r} listed twice")
                slot_of[key] = (v, s)
        paths = {}
        crossings: list[str] = []
        for nm, (tail, head, passages) in edges.items():
            try:
                tv, ts = slot_of[(nm, ">")]
                hv, hs = slot_of[(nm, "<")]
            except KeyError as exc:
                raise DiagramError(f"edge {nm!r} is missing an end in the vertex lists") from exc
            if (tv, hv) != (tail, head):
                raise DiagramError(f"edge {nm!r} ends do not match its tail/head")
            paths[nm] = EdgePath(tv, ts, tuple((c, int(s)) for c, s in passages), hv, hs)
            for c, _ in passages:
                if c not in crossings:
                    crossings.append(c)
        d = cls({v: len(e) for v, e in vertices.items()}, tuple(crossings), paths, free_loops, name)
        problems = validate(d)
        if problems:
            raise DiagramError(problems)
        return d

    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.edges, key=_edge_sort_key))

    def passages_at(self) -> dict[str, list[tuple[str, int]]]:
        """crossing -> [(edge, entry_slot), ...]"""
        out: dict[str, list[tuple[str, int]]] = {c: [] for c in self.crossings}
        for e in self.edge_ids:
            for c, s in self.edges[e].passages:
                out.setdefault(c, []).append((e, s))
        return out

    def planar(self) -> PlanarCode:
        return self.planar_with_arcs()[0]

    def planar_with_arcs(self) -> tuple[PlanarCode, dict[str, list[int]]]:
        """Arc-labelled code plus, per edge, the arc labels from tail to head."""
        slots: dict[str, list[int | None]] = {v: [None] * k for v, k in self.vertices.items()}
        for c in self.crossings:
            slots[c] = [None] * 4
        label = itertools.count()
        edge_arcs: dict[str, list[int]] = {}
        for e in self.edge_ids:
            p = self.edges[e]
            a = next(label)
            arcs = [a]
            slots[p.tail][p.tail_slot] = a
            for c, s in p.passages:
                slots[c][s] = a
                a = next(label)
                arcs.append(a)
                slots[c][(s + 2) % 4] = a
            slots[p.head][p.head_slot] = a
            edge_arcs[e] = arcs
        nodes = []
        for v in sorted(self.vertices, key=_natural_key):
            nodes.append(Node(v, "vertex", tuple(slots[v])))
        for c in self.crossings:
            nodes.append(Node(c, "crossing", tuple(slots[c])))
        return PlanarCode(tuple(nodes), self.free_loops), edge_arcs

    def abstract_graph(self) -> tuple[list[str], list[tuple[str, str, str]]]:
        return (sorted(self.vertices, key=_natural_key),
                [(e, self.edges[e].tail, self.edges[e].head) for e in self.edge_ids])

    @property
    def kind(self) -> str:
        return classify(self)

    def canonical(self) -> tuple:
        """Code up to rotating crossings by two slots (the same crossing)."""
        # rotate each crossing by two slots if needed so its understrand enters at slot 0
        rot = {c: next(s for _, s in ps if s % 2 == 0) for c, ps in self.passages_at().items()}
        edges = tuple(sorted(
            (e, p.tail, p.tail_slot, tuple((c, (s - rot[c]) % 4) for c, s in p.passages), p.head, p.head_slot)
            for e, p in self.edges.items()))
        return (tuple(sorted(self.vertices.items())), tuple(sorted(self.crossings)), edges, self.free_loops)


def _natural_key(s: str):
    import re
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


def _edge_sort_key(s: str):
    return _natural_key(s)


# ---------------------------------------------------------------------------
# validation and classification
# ---------------------------------------------------------------------------

def validate(D: SpatialGraphDiagram | LinkDiagram | PlanarCode) -> list[str]:
    """Return the list of violated invariants (empty when valid)."""
    if not isinstance(D, SpatialGraphDiagram):
        out = D.check()
        if isinstance(D, LinkDiagram) and any(n.kind == "vertex" for n in D.nodes):
            out.append("link diagram contains graph vertices")
        if isinstance(D, LinkDiagram) and D.heads is not None and not out:
            out += _check_heads(D)
        return out
    out: list[str] = []
    used: dict[Endpoint, str] = {}

    def use(ep: Endpoint, who: str):
        if ep in used:
            out.append(f"slot reuse: {ep} used by {used[ep]} and {who}")
        used[ep] = who

    if set(D.vertices) & set(D.crossings):
        out.append("a node id is both a vertex and a crossing")
    for e, p in D.edges.items():
        for end, v, s in (("tail", p.tail, p.tail_slot), ("head", p.head, p.head_slot)):
            if v not in D.vertices:
                out.append(f"edge {e!r}: {end} {v!r} is not a vertex")
            elif not 0 <= s < D.vertices[v]:
                out.append(f"edge {e!r}: {end} slot {s} out of range at {v!r}")
            else:
                use((v, s), f"{e}.{end}")
        for c, s in p.passages:
            if c not in D.crossings:
                out.append(f"edge {e!r} passes unknown crossing {c!r}")
                continue
            if s not in range(4):
                out.append(f"edge {e!r}: bad entry slot {s} at {c!r}")
                continue
            use((c, s), f"{e}.in")
            use((c, (s + 2) % 4), f"{e}.out")
    for v, k in D.vertices.items():
        for s in range(k):
            if (v, s) not in used:
                out.append(f"vertex {v!r} slot {s} unused")
    for c in D.crossings:
        for s in range(4):
            if (c, s) not in used:
                out.append(f"crossing {c!r} slot {s} unused")
    if D.free_loops < 0:
        out.append("negative free loop count")
    if not out:
        out += _check_graph_conventions(D)
    return out


def _check_heads(L: LinkDiagram) -> list[str]:
    out = []
    ends = L.endpoints()
    for a, eps in ends.items():
        h = L.heads.get(a)
        if h not in eps:
            out.append(f"arc {a}: head {h} is not one of its endpoints")
    # consistency: a strand enters a node at one slot and leaves at the partner slot
    for n in L.nodes:
        k = n.degree
        for s in range(k // 2):
            a, b = n.arcs[s], n.arcs[s + k // 2]
            into_a = L.heads.get(a) == (n.id, s)
            into_b = L.heads.get(b) == (n.id, s + k // 2)
            if into_a == into_b and not (a == b):
                out.append(f"node {n.id!r}: strand through slots {s},{s + k // 2} is not consistently oriented")
    return out


def _check_graph_conventions(D: SpatialGraphDiagram) -> list[str]:
    kind = classify(D)
    if kind == "K4-unlabelled":
        return ["K4 diagram must use edge labels a1..a6 with the standard orientations"]
    return []


def classify(D: SpatialGraphDiagram) -> str:
    """One of 'K4', 'theta', 'knot', 'link', 'K4-unlabelled', 'other'."""
    if isinstance(D, LinkDiagram):
        return "link"
    verts, edges = D.abstract_graph()
    deg = Counter()
    for _, t, h in edges:
        deg[t] += 1
        deg[h] += 1
    if not verts:
        return "link"
    if len(verts) == 4 and len(edges) == 6 and all(deg[v] == 3 for v in verts):
        pairs = {frozenset((t, h)) for _, t, h in edges}
        if len(pairs) == 6 and all(len(p) == 2 for p in pairs):
            return "K4" if _is_standard_k4(D) else "K4-unlabelled"
    if len(verts) == 2 and len(edges) == 3 and all(deg[v] == 3 for v in verts) and all(t != h for _, t, h in edges):
        return "theta"
    if all(deg[v] == 2 for v in verts) and len(edges) == len(verts) and _connected(verts, edges) and D.free_loops == 0:
        return "knot"
    return "other"


def _connected(verts, edges) -> bool:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, t, h in edges:
        parent[find(t)] = find(h)
    return len({find(v) for v in verts}) == 1


def _is_standard_k4(D: SpatialGraphDiagram) -> bool:
    """Edge labels and orientations: a1,a2,a3 leave a common centre; a4: a2->a3,
    a5: a3->a1, a6: a1->a2 (heads)."""
    E = D.edges
    if set(E) != set(K4_EDGES):
        return False
    c = E["a1"].tail
    if E["a2"].tail != c or E["a3"].tail != c:
        return False
    h1, h2, h3 = E["a1"].head, E["a2"].head, E["a3"].head
    return ((E["a4"].tail, E["a4"].head) == (h2, h3)
            and (E["a5"].tail, E["a5"].head) == (h3, h1)
            and (E["a6"].tail, E["a6"].head) == (h1, h2))


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------

A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((1, 2), (3, 0))


@dataclass(frozen=True)
class ResolvedState:
    """Abstract graph of a crossing-free resolution."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    m_plus: int
    m_minus: int

    @property
    def omega(self) -> int:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = self.num_vertices
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps

    @property
    def beta(self) -> int:
        return len(self.edges) - self.num_vertices + self.omega


def resolve_state(D: SpatialGraphDiagram | PlanarCode, state: Mapping[str, int]) -> ResolvedState:
    """Apply +1 (A-smoothing), -1 (B-smoothing) or 0 (new vertex) at every crossing.

    Free circles become a vertex carrying a loop, which has the same
    component count and cycle rank.
    """
    code = D.planar() if isinstance(D, SpatialGraphDiagram) else D
    crossings = [n.id for n in code.nodes if n.kind == "crossing"]
    missing = [c for c in crossings if c not in state]
    if missing:
        raise ValueError(f"state does not assign crossings {missing}")
    return _resolve(code, state)


def _resolve(code: PlanarCode, state: Mapping[str, int]) -> ResolvedState:
    ends = code.endpoints()
    vid: dict[str, int] = {}
    through: dict[Endpoint, Endpoint] = {}
    m_plus = m_minus = 0
    for n in code.nodes:
        if n.kind == "vertex" or (n.kind == "crossing" and state[n.id] == 0):
            vid[n.id] = len(vid)
        elif n.kind == "joint":
            through[(n.id, 0)] = (n.id, 1)
            through[(n.id, 1)] = (n.id, 0)
        else:
            s = state[n.id]
            if s == 1:
                m_plus += 1
                pairs = A_PAIRS
            elif s == -1:
                m_minus += 1
                pairs = B_PAIRS
            else:
                raise ValueError(f"bad state value {s} at {n.id}")
            for i, j in pairs:
                through[(n.id, i)] = (n.id, j)
                through[(n.id, j)] = (n.id, i)

    def other_end(ep: Endpoint) -> Endpoint:
        a = arc_at[ep]
        e1, e2 = ends[a]
        return e2 if e1 == ep else e1

    arc_at = {(n.id, s): a for n in code.nodes for s, a in enumerate(n.arcs)}
    seen: set[Endpoint] = set()
    edges: list[tuple[int, int]] = []
    nv = len(vid)
    for n in code.nodes:
        if n.id not in vid:
            continue
        for s in range(n.degree):
            start = (n.id, s)
            if start in seen:
                continue
            ep = start
            while True:
                seen.add(ep)
                ep = other_end(ep)
                seen.add(ep)
                if ep[0] in vid:
                    break
                ep = through[ep]
            edges.append((vid[n.id], vid[ep[0]]))
    # closed circles through smoothed crossings / joints only
    for ep0 in list(through):
        if ep0 in seen:
            continue
        ep = ep0
        while ep not in seen:
            seen.add(ep)
            ep = other_end(ep)
            seen.add(ep)
            ep = through[ep]
        edges.append((nv, nv))
        nv += 1
    for _ in range(code.free_loops):
        edges.append((nv, nv))
        nv += 1
    return ResolvedState(nv, tuple(edges), m_plus, m_minus)


def smooth(code: PlanarCode, crossing: str, how: int) -> PlanarCode:
    """D+ (how=+1), D- (how=-1) or D0 (how=0: the crossing becomes a 4-valent vertex)."""
    if how == 0:
        nodes = tuple(Node(n.id, "vertex", n.arcs) if n.id == crossing else n for n in code.nodes)
        return PlanarCode(nodes, code.free_loops)
    n = code.node(crossing)
    pairs = A_PAIRS if how == 1 else B_PAIRS
    nodes, loops = _rejoin(code.nodes, {crossing}, [(n.arcs[i], n.arcs[j]) for i, j in pairs])
    if isinstance(code, LinkDiagram):
        return LinkDiagram(nodes, code.free_loops + loops)
    return PlanarCode(nodes, code.free_loops + loops)


def _rejoin(nodes: Iterable[Node], removed: set[str], pairs: Iterable[tuple[int, int]]):
    """Delete ``removed`` nodes and join dangling arc ends pairwise.

    Returns the new node tuple and the number of closed loops created.
    """
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    loops = 0
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            parent[ra] = rb
    kept = tuple(Node(n.id, n.kind, tuple(find(a) for a in n.arcs)) for n in nodes if n.id not in removed)
    return kept, loops


# ---------------------------------------------------------------------------
# edge deletion
# ---------------------------------------------------------------------------

def delete_edges(D: SpatialGraphDiagram, keep: Iterable[str]) -> SpatialGraphDiagram:
    """Sub-diagram on the kept edges, with 2-valent vertices dissolved.

    A component that would lose all its vertices keeps one, so constituent
    knots come back as a single edge on one 2-valent vertex.
    """
    keep = set(keep)
    unknown = keep - set(D.edges)
    if unknown:
        raise KeyError(f"unknown edges {sorted(unknown)}")
    at = D.passages_at()
    crossings = tuple(c for c in D.crossings if all(e in keep for e, _ in at[c]))
    alive = set(crossings)
    edges = {}
    for e in D.edge_ids:
        if e in keep:
            p = D.edges[e]
            edges[e] = replace(p, passages=tuple(x for x in p.passages if x[0] in alive))
    # reindex vertex slots
    vertices = {}
    for v, k in D.vertices.items():
        used = sorted(s for e, p in edges.items() for vv, s in ((p.tail, p.tail_slot), (p.head, p.head_slot)) if vv == v)
        if not used:
            continue
        new = {s: i for i, s in enumerate(used)}
        vertices[v] = len(used)
        for e, p in list(edges.items()):
            if p.tail == v:
                p = replace(p, tail_slot=new[p.tail_slot])
            if p.head == v:
                p = replace(p, head_slot=new[p.head_slot])
            edges[e] = p
    out = SpatialGraphDiagram(vertices, crossings, edges, D.free_loops, D.name)
    return _dissolve(out)


def _dissolve(D: SpatialGraphDiagram) -> SpatialGraphDiagram:
    vertices = dict(D.vertices)
    edges = dict(D.edges)
    changed = True
    while changed:
        changed = False
        for v in sorted(vertices, key=_natural_key):
            if vertices[v] != 2:
                continue
            at_v = [(e, end) for e, p in sorted(edges.items()) for end, vv in (("tail", p.tail), ("head", p.head)) if vv == v]
            names = {e for e, _ in at_v}
            if len(names) == 1:
                continue  # a closed cycle through v only: keep v
            (e1, end1), (e2, end2) = sorted(at_v, key=lambda t: _edge_sort_key(t[0]))
            p1, p2 = edges.pop(e1), edges.pop(e2)
            # keep e1's orientation
            if end1 == "head":
                into_v, out_v = p1, (p2 if end2 == "tail" else p2.reversed())
                name = f"{e1}+{e2}"
            else:
                into_v, out_v = (p2 if end2 == "head" else p2.reversed()), p1
                name = f"{e2}+{e1}"
            merged = EdgePath(into_v.tail, into_v.tail_slot, into_v.passages + out_v.passages,
                              out_v.head, out_v.head_slot)
            edges[name] = merged
            del vertices[v]
            changed = True
            break
    return SpatialGraphDiagram(vertices, D.crossings, edges, D.free_loops, D.name)


# ---------------------------------------------------------------------------
# doubling, twisting, bars
# ---------------------------------------------------------------------------

class _Labels:
    def __init__(self, start: int = 0):
        self.next = start
        self.parent: dict[int, int] = {}

    def new(self) -> int:
        self.next += 1
        self.parent[self.next] = self.next
        return self.next

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def double(D: SpatialGraphDiagram, every_arc: bool = False) -> LinkDiagram:
    """Blackboard 2-parallel of the band surface, oriented band-antiparallel.

    Each band gets a pair of joints on its first arc, next to the tail vertex;
    those are the ports used by :func:`insert_half_twists` and :func:`turnback`.
    With ``every_arc`` every arc of an edge gets a port (named ``e#k`` for
    the k-th arc, k >= 1).
    """
    code, edge_arcs = D.planar_with_arcs()
    ends = code.endpoints()
    port_arc = {}
    for e, arcs in edge_arcs.items():
        p = D.edges[e]
        near = [(p.tail, p.tail_slot)] + [(c, (s + 2) % 4) for c, s in p.passages]
        for k, a in enumerate(arcs if every_arc else arcs[:1]):
            port_arc[a] = (e if k == 0 else f"{e}#{k}", near[k])
    lab = _Labels()
    stub: dict[tuple[str, str, int], int] = {}
    nodes: list[list] = []  # [id, kind, [labels]]
    ports = {}
    for a, (h1, h2) in sorted(ends.items()):
        if a in port_arc:
            e, near = port_arc[a]
            if h1 != near:
                h1, h2 = h2, h1
            a1, b1, a2, b2 = lab.new(), lab.new(), lab.new(), lab.new()
            jl, jr = f"{e}.L", f"{e}.R"
            nodes.append([jl, "joint", [a1, b1]])
            nodes.append([jr, "joint", [a2, b2]])
            ports[e] = (jl, jr)
            stub[("L",) + h1] = a1
            stub[("R",) + h2] = b1
            stub[("R",) + h1] = a2
            stub[("L",) + h2] = b2
        else:
            d1, d2 = lab.new(), lab.new()
            stub[("L",) + h1] = stub[("R",) + h2] = d1
            stub[("R",) + h1] = stub[("L",) + h2] = d2
    for n in code.nodes:
        if n.kind == "vertex":
            k = n.degree
            for s in range(k):
                lab.union(stub[("L", n.id, s)], stub[("R", n.id, (s + 1) % k)])
        elif n.kind == "crossing":
            c = n.id
            u1, u2, o1, o2 = lab.new(), lab.new(), lab.new(), lab.new()
            S = lambda side, s: stub[(side, c, s)]  # noqa: E731
            nodes.append([f"{c}.pp", "crossing", [S("L", 0), S("R", 1), u1, o2]])
            nodes.append([f"{c}.mp", "crossing", [u1, S("L", 1), S("R", 2), o1]])
            nodes.append([f"{c}.mm", "crossing", [u2, o1, S("L", 2), S("R", 3)]])
            nodes.append([f"{c}.pm", "crossing", [S("R", 0), o2, u2, S("L", 3)]])
        else:
            raise DiagramError(f"cannot double node kind {n.kind!r}")
    final = tuple(Node(i, k, tuple(lab.find(a) for a in arcs)) for i, k, arcs in nodes)
    bands = {e: ((jl, 0), (jr, 0)) for e, (jl, jr) in ports.items()}
    L = LinkDiagram(_relabel(final), 2 * D.free_loops, None, ports, bands)
    return orient(L)


def _relabel(nodes: tuple[Node, ...]) -> tuple[Node, ...]:
    m: dict[int, int] = {}
    out = []
    for n in nodes:
        out.append(Node(n.id, n.kind, tuple(m.setdefault(a, len(m)) for a in n.arcs)))
    return tuple(out)


def _fresh(L: PlanarCode) -> itertools.count:
    top = max((a for n in L.nodes for a in n.arcs), default=-1)
    return itertools.count(top + 1)


def insert_half_twists(L: LinkDiagram, band: str, n: int) -> LinkDiagram:
    """Replace the band's port by |n| half twists.

    Positive twists use crossings whose A-smoothing keeps the strands
    parallel, so that b_n = A^n b_0 + f_n b_inf.
    """
    if band not in L.ports:
        raise KeyError(f"unknown band {band!r}")
    if n == 0:
        return L
    jl, jr = L.ports[band]
    p, q = L.node(jl).arcs
    r, s = L.node(jr).arcs
    fresh = _fresh(L)
    north, south = p, r  # node side: left strand (north) and right strand (south)
    new_nodes = []
    for k in range(abs(n)):
        last = k == abs(n) - 1
        ne = q if last else next(fresh)
        se = s if last else next(fresh)
        cid = f"{band}.t{k}"
        if n > 0:  # under SW-NE, slots SW, SE, NE, NW
            new_nodes.append(Node(cid, "crossing", (south, se, ne, north)))
        else:  # under NW-SE, slots NW, SW, SE, NE
            new_nodes.append(Node(cid, "crossing", (north, south, se, ne)))
        north, south = ne, se
    first = f"{band}.t0"
    band_ends = ((first, 3), (first, 0)) if n > 0 else ((first, 0), (first, 1))
    nodes = tuple(x for x in L.nodes if x.id not in (jl, jr)) + tuple(new_nodes)
    ports = {k: v for k, v in L.ports.items() if k != band}
    bands = dict(L.bands)
    bands[band] = band_ends
    out = LinkDiagram(nodes, L.free_loops, None, ports, bands)
    try:
        return orient(out)
    except DiagramError:
        return out


def turnback(L: LinkDiagram, band: str) -> LinkDiagram:
    """Cut the band at its port and cap both sides (the bar's B- resolution)."""
    if band not in L.ports:
        raise KeyError(f"unknown band {band!r}")
    jl, jr = L.ports[band]
    p, q = L.node(jl).arcs
    r, s = L.node(jr).arcs
    nodes, loops = _rejoin(L.nodes, {jl, jr}, [(p, r), (q, s)])
    ports = {k: v for k, v in L.ports.items() if k != band}
    bands = {k: v for k, v in L.bands.items() if k != band}
    return LinkDiagram(nodes, L.free_loops + loops, None, ports, bands)


def bar_diagram(D: SpatialGraphDiagram, every_arc: bool = False) -> BarDiagram:
    """One bar per edge (or per arc); two bars on a band resolve like one."""
    base = double(D, every_arc=every_arc)
    return BarDiagram(base, {e: 1 for e in base.ports})


# ---------------------------------------------------------------------------
# orientation and writhe
# ---------------------------------------------------------------------------

def _partner_slot(n: Node, s: int) -> int:
    k = n.degree
    if n.kind == "vertex":
        raise DiagramError("link diagram contains graph vertices")
    return (s + k // 2) % k


def _traverse(L: PlanarCode):
    """Yield (arc labels, heads) per component, each traversed from its
    smallest-labelled arc towards that arc's first listed endpoint."""
    ends = L.endpoints()
    by_id = {n.id: n for n in L.nodes}
    seen: set[int] = set()
    for a0 in sorted(ends):
        if a0 in seen:
            continue
        comp, heads = [], {}
        a = a0
        head = ends[a0][1]
        while True:
            seen.add(a)
            comp.append(a)
            heads[a] = head
            nid, s = head
            n = by_id[nid]
            s2 = _partner_slot(n, s)
            b = n.arcs[s2]
            e1, e2 = ends[b]
            if e1 == (nid, s2) and e2 == (nid, s2):
                raise DiagramError("degenerate arc")
            head = e2 if e1 == (nid, s2) else e1
            if b == a0 and head == heads[a0]:
                break
            if b in seen and b != a0:
                raise DiagramError("inconsistent traversal")
            a = b
        yield comp, heads


def orient(L: LinkDiagram) -> LinkDiagram:
    """Orient so that the two boundary strands of every band run oppositely.

    Raises DiagramError when no such orientation exists (an odd total number
    of half twists around some cycle of bands).
    """
    comps = list(_traverse(L))
    comp_of: dict[int, int] = {}
    heads: dict[int, Endpoint] = {}
    for i, (arcs, h) in enumerate(comps):
        for a in arcs:
            comp_of[a] = i
        heads.update(h)
    by_id = {n.id: n for n in L.nodes}
    # constraint graph: flip[i] ^ flip[j] == parity
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for band, (ep_l, ep_r) in sorted(L.bands.items()):
        al = by_id[ep_l[0]].arcs[ep_l[1]]
        ar = by_id[ep_r[0]].arcs[ep_r[1]]
        out_l = heads[al] == ep_l
        out_r = heads[ar] == ep_r
        parity = 0 if out_l != out_r else 1
        i, j = comp_of[al], comp_of[ar]
        adj[i].append((j, parity))
        adj[j].append((i, parity))
    flip: dict[int, int] = {}
    for start in range(len(comps)):
        if start in flip:
            continue
        flip[start] = 0
        stack = [start]
        while stack:
            i = stack.pop()
            for j, par in adj[i]:
                want = flip[i] ^ par
                if j not in flip:
                    flip[j] = want
                    stack.append(j)
                elif flip[j] != want:
                    raise DiagramError("band surface is not orientable for these twists")
    ends = L.endpoints()
    final = {}
    for a, h in heads.items():
        if flip[comp_of[a]]:
            e1, e2 = ends[a]
            h = e2 if h == e1 else e1
            if e1 == e2:
                h = e1
        final[a] = h
    return replace(L, heads=final)


def crossing_sign(L: LinkDiagram, crossing: str) -> int:
    if L.heads is None:
        raise DiagramError("writhe needs an oriented diagram")
    n = L.node(crossing)
    return _sign(L.heads, n)


def _sign(heads: Mapping[int, Endpoint], n: Node) -> int:
    under_in0 = _enters(heads, n, 0)
    over_in3 = _enters(heads, n, 3)
    return 1 if under_in0 == over_in3 else -1


def _enters(heads, n: Node, s: int) -> bool:
    """Does the strand through slot s (and s+2) enter at slot s?"""
    a = n.arcs[s]
    b = n.arcs[(s + 2) % 4]
    if heads[a] == (n.id, s):
        return True
    if heads[b] == (n.id, (s + 2) % 4):
        return False
    raise DiagramError(f"orientation at {n.id!r} is inconsistent")


def crossing_signs(L: LinkDiagram) -> dict[str, int]:
    if L.heads is None:
        raise DiagramError("writhe needs an oriented diagram")
    return {n.id: _sign(L.heads, n) for n in L.nodes if n.kind == "crossing"}


def writhe(L: LinkDiagram) -> int:
    return sum(crossing_signs(L).values())


# ---------------------------------------------------------------------------
# mirror, union, conversions
# ---------------------------------------------------------------------------

def mirror(D):
    """Swap over and under at every crossing."""
    if isinstance(D, SpatialGraphDiagram):
        edges = {e: replace(p, passages=tuple((c, (s - 1) % 4) for c, s in p.passages)) for e, p in D.edges.items()}
        return SpatialGraphDiagram(dict(D.vertices), D.crossings, edges, D.free_loops, D.name)
    cross = {n.id for n in D.nodes if n.kind == "crossing"}

    def rot(ep):
        return (ep[0], (ep[1] - 1) % 4) if ep[0] in cross else ep

    nodes = tuple(Node(n.id, n.kind, n.arcs[1:] + n.arcs[:1]) if n.kind == "crossing" else n for n in D.nodes)
    if isinstance(D, LinkDiagram):
        heads = None if D.heads is None else {a: rot(h) for a, h in D.heads.items()}
        bands = {b: (rot(x), rot(y)) for b, (x, y) in D.bands.items()}
        return LinkDiagram(nodes, D.free_loops, heads, dict(D.ports), bands)
    return PlanarCode(nodes, D.free_loops)


def disjoint_union(D1, D2):
    """Side-by-side union; ids of the second diagram get a ``'`` suffix."""
    if isinstance(D1, SpatialGraphDiagram) and isinstance(D2, SpatialGraphDiagram):
        ren = lambda x: x + "'"  # noqa: E731
        edges = dict(D1.edges)
        for e, p in D2.edges.items():
            edges[ren(e)] = EdgePath(ren(p.tail), p.tail_slot, tuple((ren(c), s) for c, s in p.passages),
                                     ren(p.head), p.head_slot)
        vertices = dict(D1.vertices)
        vertices.update({ren(v): k for v, k in D2.vertices.items()})
        return SpatialGraphDiagram(vertices, D1.crossings + tuple(map(ren, D2.crossings)), edges,
                                   D1.free_loops + D2.free_loops)
    off = max((a for n in D1.nodes for a in n.arcs), default=-1) + 1
    nodes2 = tuple(Node(n.id + "'", n.kind, tuple(a + off for a in n.arcs)) for n in D2.nodes)
    heads = None
    if isinstance(D1, LinkDiagram) and isinstance(D2, LinkDiagram) and D1.heads is not None and D2.heads is not None:
        heads = dict(D1.heads)
        heads.update({a + off: (h[0] + "'", h[1]) for a, h in D2.heads.items()})
    return LinkDiagram(D1.nodes + nodes2, D1.free_loops + D2.free_loops, heads)


def as_link(D: SpatialGraphDiagram) -> LinkDiagram:
    """A diagram whose vertices all have degree 2, read as an oriented link."""
    if any(k != 2 for k in D.vertices.values()):
        raise DiagramError("only diagrams with 2-valent vertices are links")
    code, edge_arcs = D.planar_with_arcs()
    nodes = tuple(Node(n.id, "joint" if n.kind == "vertex" else n.kind, n.arcs) for n in code.nodes)
    heads = {}
    for e, arcs in edge_arcs.items():
        p = D.edges[e]
        stops = [(c, s) for c, s in p.passages] + [(p.head, p.head_slot)]
        for a, h in zip(arcs, stops):
            heads[a] = h
    # joints have slot 0 -> 1 as their through-pair; arcs at a joint were
    # listed in the vertex's slot order, which is what _partner_slot expects
    return LinkDiagram(nodes, D.free_loops, heads)


def link_from_pd(pd: Sequence[Sequence[int]], free_loops: int = 0) -> LinkDiagram:
    """Link from a PD code (understrand enters at slot 0, slots counterclockwise)."""
    nodes = tuple(Node(f"x{i + 1}", "crossing", tuple(int(a) for a in X)) for i, X in enumerate(pd))
    L = LinkDiagram(nodes, free_loops)
    problems = L.check()
    if problems:
        raise DiagramError(problems)
    heads: dict[int, Endpoint] = {}
    ends = L.endpoints()
    for arcs, h in _traverse(L):
        # the understrand enters every crossing at slot 0
        flip = None
        for a in arcs:
            for ep in ends[a]:
                if ep[1] in (0, 2):
                    want = ep[1] == 0
                    got = h[a] == ep
                    f = want != got
                    if flip is None:
                        flip = f
                    elif flip != f:
                        raise DiagramError("PD code is not consistently oriented")
        for a in arcs:
            e1, e2 = ends[a]
            heads[a] = (e2 if h[a] == e1 else e1) if flip else h[a]
    return replace(L, heads=heads)


def knot_from_pd(pd: Sequence[Sequence[int]], name: str = "") -> SpatialGraphDiagram:
    """Knot diagram with one 2-valent vertex, placed on the smallest arc label."""
    L = link_from_pd(pd)
    if len(L.components()) != 1:
        raise DiagramError("PD code has more than one component")
    comp = L.components()[0]
    start = min(comp)
    k = comp.index(start)
    order = comp[k:] + comp[:k]
    passages = tuple((L.heads[a][0], L.heads[a][1]) for a in order)
    edge = EdgePath("v", 0, passages, "v", 1)
    D = SpatialGraphDiagram({"v": 2}, tuple(n.id for n in L.nodes), {"k": edge}, 0, name)
    problems = validate(D)
    if problems:
        raise DiagramError(problems)
    return D


# ---------------------------------------------------------------------------
# K4 subgraphs
# ---------------------------------------------------------------------------

def k4_cycles() -> list[frozenset[str]]:
    """The four triangles followed by the three squares."""
    return [frozenset(c) for c in (
        ("a1", "a2", "a6"), ("a1", "a3", "a5"), ("a2", "a3", "a4"), ("a4", "a5", "a6"),
        ("a1", "a2", "a4", "a5"), ("a1", "a3", "a4", "a6"), ("a2", "a3", "a5", "a6"))]


def k4_thetas() -> list[frozenset[str]]:
    """Theta subgraphs, the i-th missing edge a_i."""
    return [frozenset(K4_EDGES) - {e} for e in K4_EDGES]


# ---------------------------------------------------------------------------
# JSON format
# ---------------------------------------------------------------------------

def to_dict(D) -> dict:
    """The documented JSON layout (nodes, arcs, edges, free_loops)."""
    if isinstance(D, SpatialGraphDiagram):
        code, edge_arcs = D.planar_with_arcs()
        ends = code.endpoints()
        arcs = []
        for a in sorted(ends):
            arcs.append([list(ends[a][0]), list(ends[a][1])])
        # orient each arc pair tail->head along its edge
        for e, labels in edge_arcs.items():
            p = D.edges[e]
            stops = [(p.tail, p.tail_slot)] + [(c, (s + 2) % 4) for c, s in p.passages]
            for a, st in zip(labels, stops):
                if tuple(arcs[a][0]) != st:
                    arcs[a] = [arcs[a][1], arcs[a][0]]
        nodes = [{"id": n.id, "kind": n.kind, "slots": n.degree} for n in code.nodes]
        edges = {e: {"tail": D.edges[e].tail, "head": D.edges[e].head, "arcs": edge_arcs[e]} for e in D.edge_ids}
        return {"type": "spatial_graph", "name": D.name, "nodes": nodes, "arcs": arcs, "edges": edges,
                "free_loops": D.free_loops}
    ends = D.endpoints()
    arcs = []
    for a in sorted(ends):
        e1, e2 = ends[a]
        if isinstance(D, LinkDiagram) and D.heads is not None and D.heads[a] == e1 and e1 != e2:
            e1, e2 = e2, e1
        arcs.append([list(e1), list(e2)])
    nodes = [{"id": n.id, "kind": n.kind, "slots": n.degree} for n in D.nodes]
    out = {"type": "link", "nodes": nodes, "arcs": arcs, "free_loops": D.free_loops,
           "oriented": isinstance(D, LinkDiagram) and D.heads is not None}
    return out


def from_dict(data: Mapping, source: str | None = None):
    """Inverse of :func:`to_dict`; raises DiagramError listing every violation."""
    locate = _Locator(source) if source else None

    def where(path: str) -> str:
        if locate is None:
            return path
        line = locate.line(path)
        return f"line {line}: {path}" if line else path

    errs: list[str] = []
    for key in ("nodes", "arcs"):
        if key not in data:
            errs.append(where(key) + ": missing")
    if errs:
        raise DiagramError(errs)
    slots: dict[str, list[int | None]] = {}
    kinds: dict[str, str] = {}
    for i, nd in enumerate(data["nodes"]):
        try:
            nid, kind, k = str(nd["id"]), nd["kind"], int(nd["slots"])
        except (KeyError, TypeError, ValueError):
            errs.append(where(f"nodes[{i}]") + ": node needs id, kind and slots")
            continue
        if nid in slots:
            errs.append(where(f"nodes[{i}]") + f": duplicate node id {nid!r}")
        if kind not in ("vertex", "crossing", "joint"):
            errs.append(where(f"nodes[{i}]") + f": unknown kind {kind!r}")
        if kind == "crossing" and k != 4:
            errs.append(where(f"nodes[{i}]") + f": crossing {nid!r} must have 4 slots")
        slots[nid] = [None] * max(k, 0)
        kinds[nid] = kind
    ordered_arcs: list[tuple[Endpoint, Endpoint]] = []
    for i, arc in enumerate(data["arcs"]):
        try:
            (n1, s1), (n2, s2) = arc
            eps = ((str(n1), int(s1)), (str(n2), int(s2)))
        except (TypeError, ValueError):
            errs.append(where(f"arcs[{i}]") + ": an arc is a pair of [node, slot] endpoints")
            ordered_arcs.append((("?", -1), ("?", -1)))
            continue
        ordered_arcs.append(eps)
        for nid, s in eps:
            if nid not in slots:
                errs.append(where(f"arcs[{i}]") + f": unknown node {nid!r}")
            elif not 0 <= s < len(slots[nid]):
                errs.append(where(f"arcs[{i}]") + f": slot {s} out of range at {nid!r}")
            elif slots[nid][s] is not None:
                errs.append(where(f"arcs[{i}]") + f": slot reuse at ({nid!r}, {s}), also arc {slots[nid][s]}")
            else:
                slots[nid][s] = i
    for nid, ss in slots.items():
        for s, a in enumerate(ss):
            if a is None:
                errs.append(where("nodes") + f": slot {s} of {nid!r} has no arc")
    free = int(data.get("free_loops", 0))
    if errs:
        raise DiagramError(errs)
    if data.get("type", "spatial_graph" if "edges" in data else "link") == "link":
        nodes = tuple(Node(nid, kinds[nid], tuple(ss)) for nid, ss in slots.items())
        heads = None
        if data.get("oriented"):
            heads = {i: eps[1] for i, eps in enumerate(ordered_arcs)}
        L = LinkDiagram(nodes, free, heads)
        problems = validate(L)
        if problems:
            raise DiagramError([where("arcs") + ": " + p for p in problems])
        return L
    # spatial graph: rebuild edge paths from arc lists
    vertices = {nid: len(ss) for nid, ss in slots.items() if kinds[nid] == "vertex"}
    crossings = tuple(nid for nid in slots if kinds[nid] == "crossing")
    edges = {}
    for e, routes in data.get("edges", {}).items():
        try:
            tail, head, arcs = str(routes["tail"]), str(routes["head"]), [int(a) for a in routes["arcs"]]
        except (KeyError, TypeError, ValueError):
            errs.append(where(f"edges.{e}") + ": edge needs tail, head and arcs")
            continue
        if not arcs or any(not 0 <= a < len(ordered_arcs) for a in arcs):
            errs.append(where(f"edges.{e}") + ": arc index out of range")
            continue
        first = ordered_arcs[arcs[0]]
        if first[0][0] == tail:
            cur_start, cur_end = first
        elif first[1][0] == tail:
            cur_end, cur_start = first
        else:
            errs.append(where(f"edges.{e}") + f": first arc does not touch tail {tail!r}")
            continue
        passages = []
        tail_slot = cur_start[1]
        ok = True
        for a in arcs[1:]:
            c, s = cur_end
            if kinds.get(c) != "crossing":
                errs.append(where(f"edges.{e}") + f": path reaches non-crossing {c!r} before its end")
                ok = False
                break
            passages.append((c, s))
            leave = (c, (s + 2) % 4)
            x, y = ordered_arcs[a]
            if x == leave:
                cur_end = y
            elif y == leave:
                cur_end = x
            else:
                errs.append(where(f"edges.{e}") + f": arc {a} does not leave {c!r} opposite slot {s}")
                ok = False
                break
        if not ok:
            continue
        if cur_end[0] != head:
            errs.append(where(f"edges.{e}") + f": path ends at {cur_end[0]!r}, not head {head!r}")
            continue
        edges[e] = EdgePath(tail, tail_slot, tuple(passages), head, cur_end[1])
    if errs:
        raise DiagramError(errs)
    D = SpatialGraphDiagram(vertices, crossings, edges, free, str(data.get("name", "")))
    problems = validate(D)
    if problems:
        raise DiagramError([where("edges") + ": " + p for p in problems])
    return D


class _Locator:
    """Maps simple JSON paths (nodes[i], arcs[i], edges.name) to line numbers."""

    def __init__(self, text: str):
        self.text = text
        self.lines: dict[str, int] = {}
        try:
            self._scan()
        except Exception:  # best effort only
            pass

    def _line(self, pos: int) -> int:
        return self.text.count("\n", 0, pos) + 1

    def _scan(self):
        dec = json.JSONDecoder()
        t = self.text
        for key in ("nodes", "arcs", "edges"):
            k = t.find(f'"{key}"')
            if k < 0:
                continue
            self.lines[key] = self._line(k)
            pos = t.index(":", k) + 1
            while t[pos].isspace():
                pos += 1
            opener = t[pos]
            pos += 1
            i = 0
            while True:
                while t[pos].isspace() or t[pos] == ",":
                    pos += 1
                if t[pos] in "]}":
                    break
                if opener == "{":
                    name, pos = dec.raw_decode(t, pos)
                    self.lines[f"{key}.{name}"] = self._line(pos)
                    pos = t.index(":", pos) + 1
                    while t[pos].isspace():
                        pos += 1
                    _, pos = dec.raw_decode(t, pos)
                else:
                    self.lines[f"{key}[{i}]"] = self._line(pos)
                    _, pos = dec.raw_decode(t, pos)
                i += 1

    def line(self, path: str) -> int | None:
        return self.lines.get(path)


def load_json(path_or_text: str):
    """Load a diagram from a file path or a JSON string."""
    text = path_or_text
    if not path_or_text.lstrip().startswith("{"):
        with open(path_or_text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_dict(data, text)


def dump_json(D, **extra) -> str:
    data = to_dict(D)
    data.update(extra)
    return json.dumps(data, indent=1, ensure_ascii=False)
