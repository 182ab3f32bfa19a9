"""Kauffman bracket, Jones, Yamada and Jaeger polynomials of diagram codes."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import A, LOOP, PHI, ZERO, LaurentPolynomial, PhiFraction
from .diagram import (
    DiagramError,
    LinkDiagram,
    PlanarCode,
    SpatialGraphDiagram,
    _resolve,
    bar_diagram,
    turnback,
    writhe,
)

try:  # the compiled kernel is optional; the fallback gives identical results
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

__all__ = [
    "StateSumConfig",
    "CapExceeded",
    "pd_code",
    "kauffman_bracket",
    "kauffman_bracket_skein",
    "bracket",
    "jones",
    "h_eval",
    "h_polynomial",
    "h_polynomial_subsets",
    "yamada",
    "jaeger",
    "jaeger_via_yamada",
]

Y_POINT = LaurentPolynomial({1: -1, 0: -2, -1: -1})  # y = -A-2-A^-1


class CapExceeded(ValueError):
    """The diagram has more crossings than the configured cap."""


@dataclass(frozen=True)
class StateSumConfig:
    workers: int = 1
    memo: bool = True
    bracket_cap: int = 22
    yamada_cap: int = 12
    # bracket(): state sum up to this many crossings, skein recursion above
    auto_threshold: int = 16
    skein_cap: int = 64

    @classmethod
    def from_env(cls) -> "StateSumConfig":
        return cls(workers=max(1, int(os.environ.get("SGPOLY_WORKERS", "1"))))


DEFAULT = StateSumConfig()


# ---------------------------------------------------------------------------
# Kauffman bracket
# ---------------------------------------------------------------------------

def pd_code(L: PlanarCode) -> tuple[list[tuple[int, int, int, int]], int]:
    """Crossing 4-tuples with joints collapsed, and the number of crossingless loops."""
    if any(n.kind == "vertex" for n in L.nodes):
        raise DiagramError("bracket input contains graph vertices")
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    loops = L.free_loops
    for n in L.nodes:
        if n.kind == "joint":
            a, b = find(n.arcs[0]), find(n.arcs[1])
            if a == b:
                loops += 1
            else:
                parent[a] = b
    relabel: dict[int, int] = {}
    crossings = []
    for n in L.nodes:
        if n.kind == "crossing":
            crossings.append(tuple(relabel.setdefault(find(a), len(relabel)) for a in n.arcs))
    return crossings, loops


@njit(cache=True, nogil=True)
def _histogram(partner, n, start, stop, hist):  # pragma: no cover - compiled
    m = 4 * n
    stamp = np.zeros(m, np.int64)
    for st in range(start, stop):
        tag = st + 1
        loops = 0
        for e0 in range(m):
            if stamp[e0] == tag:
                continue
            loops += 1
            e = e0
            while True:
                stamp[e] = tag
                f = partner[e]
                stamp[f] = tag
                c = f >> 2
                s = f & 3
                if (st >> c) & 1:
                    g = (c << 2) | (3 - s)  # B-smoothing: 0-3, 1-2
                else:
                    g = f ^ 1  # A-smoothing: 0-1, 2-3
                e = g
                if e == e0:
                    break
        k = 0
        x = st
        while x:
            k += x & 1
            x >>= 1
        hist[k, loops] += 1


def _partner_array(crossings) -> np.ndarray:
    where: dict[int, list[int]] = {}
    for c, X in enumerate(crossings):
        for s, a in enumerate(X):
            where.setdefault(a, []).append(4 * c + s)
    partner = np.empty(4 * len(crossings), np.int64)
    for a, eps in where.items():
        if len(eps) != 2:
            raise DiagramError(f"arc {a} does not have two crossing ends")
        partner[eps[0]] = eps[1]
        partner[eps[1]] = eps[0]
    return partner


@lru_cache(maxsize=None)
def _loop_power(k: int) -> LaurentPolynomial:
    return LOOP ** k


def kauffman_bracket(L: PlanarCode, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """State sum of A^(a-b) d^(loops-1) over all 2^n smoothings, d = -A^2-A^-2."""
    crossings, free = pd_code(L)
    n = len(crossings)
    if n > config.bracket_cap:
        raise CapExceeded(f"{n} crossings exceeds the bracket cap {config.bracket_cap}")
    if n == 0:
        if free == 0:
            raise DiagramError("the empty diagram has no bracket")
        return _loop_power(free - 1)
    partner = _partner_array(crossings)
    total = 1 << n
    chunks = max(1, min(config.workers, total))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    hists = [np.zeros((n + 1, 2 * n + 2), np.int64) for _ in range(chunks)]
    if chunks == 1:
        _histogram(partner, n, 0, total, hists[0])
    else:
        with ThreadPoolExecutor(chunks) as pool:
            list(pool.map(lambda i: _histogram(partner, n, bounds[i], bounds[i + 1], hists[i]), range(chunks)))
    hist = sum(hists)
    result = ZERO
    for k in range(n + 1):
        row = ZERO
        for loops in np.nonzero(hist[k])[0]:
            row = row + int(hist[k, loops]) * _loop_power(int(loops) + free - 1)
        if not row.is_zero():
            result = result + row.shift(n - 2 * k)
    return result


def kauffman_bracket_skein(L: PlanarCode, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """<D> = A<D+> + A^-1<D->, recursing on the first crossing."""
    crossings, free = pd_code(L)
    if len(crossings) > config.skein_cap:
        raise CapExceeded(f"{len(crossings)} crossings exceeds the skein cap {config.skein_cap}")
    crossings = _adjacent_order(crossings)
    memo: dict | None = {} if config.memo else None
    return _skein(tuple(crossings), free, memo)


def bracket(L: PlanarCode, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """Kauffman bracket by whichever method suits the size of the diagram.

    Small diagrams use the state sum.  Larger ones (twisted band diagrams
    mostly) go through the memoized skein recursion, which collapses twist
    regions quickly.
    """
    n = sum(1 for x in L.nodes if x.kind == "crossing")
    if n <= min(config.auto_threshold, config.bracket_cap):
        return kauffman_bracket(L, config)
    return kauffman_bracket_skein(L, config)


def _adjacent_order(crossings):
    """Reorder so that each crossing shares an arc with an earlier one when possible."""
    if not crossings:
        return crossings
    by_arc: dict[int, list[int]] = {}
    for i, X in enumerate(crossings):
        for a in X:
            by_arc.setdefault(a, []).append(i)
    order, seen = [], set()
    for start in range(len(crossings)):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            i = queue.pop(0)
            order.append(i)
            for a in crossings[i]:
                for j in by_arc[a]:
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
    return [crossings[i] for i in order]


_MA3 = LaurentPolynomial({3: -1})
_MAm3 = LaurentPolynomial({-3: -1})
_AINV = LaurentPolynomial({-1: 1})


def _join(rest, pairs):
    parent: dict[int, int] = {}

    def find(x):
        while x in parent:
            x = parent[x]
        return x

    loops = 0
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            parent[ra] = rb
    if not parent:
        return rest, loops
    return tuple(tuple(find(a) for a in X) for X in rest), loops


def _canon(crossings):
    m: dict[int, int] = {}
    return tuple(tuple(m.setdefault(a, len(m)) for a in X) for X in crossings)


def _skein(crossings, loops, memo):
    if not crossings:
        if loops == 0:
            raise DiagramError("the empty diagram has no bracket")
        return _loop_power(loops - 1)
    key = None
    if memo is not None:
        key = (_canon(crossings), loops)
        hit = memo.get(key)
        if hit is not None:
            return hit
    X, rest = crossings[0], crossings[1:]
    # a curl: two adjacent slots joined by one arc
    if X[0] == X[1] or X[2] == X[3] or X[1] == X[2] or X[3] == X[0]:
        if X[0] == X[1] and X[2] == X[3]:
            val = (A * LOOP + _AINV) * _skein(rest, loops + 1, memo)  # isolated figure-eight curl
        elif X[1] == X[2] and X[3] == X[0]:
            val = (A + _AINV * LOOP) * _skein(rest, loops + 1, memo)
        elif X[0] == X[1] or X[2] == X[3]:
            pair = (X[2], X[3]) if X[0] == X[1] else (X[0], X[1])
            new, extra = _join(rest, [pair])
            val = _MA3 * _skein(new, loops + extra, memo)
        else:
            pair = (X[0], X[3]) if X[1] == X[2] else (X[1], X[2])
            new, extra = _join(rest, [pair])
            val = _MAm3 * _skein(new, loops + extra, memo)
    else:
        na, la = _join(rest, [(X[0], X[1]), (X[2], X[3])])
        nb, lb = _join(rest, [(X[1], X[2]), (X[3], X[0])])
        val = A * _skein(na, loops + la, memo) + _AINV * _skein(nb, loops + lb, memo)
    if memo is not None:
        memo[key] = val
    return val


def jones(L: LinkDiagram, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """V(L) = (-A^3)^(-w) <L>, in the variable A."""
    if not isinstance(L, LinkDiagram) or L.heads is None:
        raise DiagramError("the Jones polynomial needs an oriented link diagram")
    w = writhe(L)
    return LaurentPolynomial.monomial(-3 * w, (-1) ** (w % 2)) * bracket(L, config)


# ---------------------------------------------------------------------------
# h(G; -1, y) and the Yamada polynomial
# ---------------------------------------------------------------------------

def _to_y(hy: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute y = -A-2-A^-1 into a polynomial in y."""
    out = ZERO
    for k in range(max(hy.max_exponent, 0), -1, -1) if not hy.is_zero() else ():
        out = out * Y_POINT + hy.coefficient(k)
    return out


def h_polynomial_subsets(num_vertices: int, edges) -> LaurentPolynomial:
    """Sum over edge subsets F of (-1)^omega(G-F) y^beta(G-F), as a polynomial in y."""
    edges = list(edges)
    acc: dict[int, int] = {}
    for mask in range(1 << len(edges)):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = num_vertices
        kept = 0
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                continue  # i in F: deleted
            kept += 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        beta = kept - num_vertices + comps
        acc[beta] = acc.get(beta, 0) + (-1) ** comps
    return LaurentPolynomial(acc)


def h_polynomial(num_vertices: int, edges) -> LaurentPolynomial:
    """Same value as :func:`h_polynomial_subsets`, by deletion and contraction."""
    return _h(_graph_key(num_vertices, edges))


_ONE_PLUS_Y = LaurentPolynomial({0: 1, 1: 1})


def _graph_key(nv, edges):
    norm = sorted((min(u, v), max(u, v)) for u, v in edges)
    m: dict[int, int] = {}
    for u, v in norm:
        m.setdefault(u, len(m))
        m.setdefault(v, len(m))
    isolated = nv - len(m)
    relabeled = tuple(sorted((min(m[u], m[v]), max(m[u], m[v])) for u, v in norm))
    return len(m), relabeled, isolated


@lru_cache(maxsize=200_000)
def _h(key) -> LaurentPolynomial:
    nv, edges, isolated = key
    factor = LaurentPolynomial.constant((-1) ** isolated)
    loops = sum(1 for u, v in edges if u == v)
    if loops:
        factor = factor * _ONE_PLUS_Y ** loops
        edges = tuple(e for e in edges if e[0] != e[1])
        # vertices that only carried loops are now isolated
        return factor * _h(_graph_key(nv, edges))
    if not edges:
        return factor * LaurentPolynomial.constant((-1) ** nv)
    deg = [0] * nv
    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d == 1 for d in deg):
        return ZERO  # a pendant edge is a bridge
    # split into connected components
    comp = [-1] * nv
    ncomp = 0
    for s in range(nv):
        if comp[s] >= 0:
            continue
        stack = [s]
        comp[s] = ncomp
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = ncomp
                    stack.append(y)
        ncomp += 1
    if ncomp > 1:
        out = factor
        for c in range(ncomp):
            verts = [v for v in range(nv) if comp[v] == c]
            sub = [(u, v) for u, v in edges if comp[u] == c]
            out = out * _h(_graph_key(len(verts), [(verts.index(u), verts.index(v)) for u, v in sub]))
        return out
    # contract an edge at a 2-valent vertex: deleting it leaves a bridge
    for v in range(nv):
        if deg[v] == 2:
            e = next(i for i, (a, b) in enumerate(edges) if v in (a, b))
            return factor * _h(_contract(nv, edges, e))
    u, v = edges[0]
    deleted = _graph_key(nv, edges[1:])
    return factor * (_h(deleted) + _h(_contract(nv, edges, 0)))


def _contract(nv, edges, i):
    u, v = edges[i]
    keep, gone = min(u, v), max(u, v)
    out = []
    for j, (a, b) in enumerate(edges):
        if j == i:
            continue
        a = keep if a == gone else a
        b = keep if b == gone else b
        a = a - 1 if a > gone else a
        b = b - 1 if b > gone else b
        out.append((a, b))
    return _graph_key(nv - 1, out)


def h_eval(num_vertices: int, edges) -> LaurentPolynomial:
    """h(G; -1, -A-2-A^-1) for the multigraph on range(num_vertices)."""
    return _to_y(h_polynomial(num_vertices, edges))


def _code(D) -> PlanarCode:
    return D.planar() if isinstance(D, SpatialGraphDiagram) else D


def yamada(D, config: StateSumConfig = DEFAULT) -> LaurentPolynomial:
    """Sum over 3^n crossing states of A^(m+ - m-) h(D_S; -1, -A-2-A^-1)."""
    code = _code(D)
    crossings = [n.id for n in code.nodes if n.kind == "crossing"]
    if len(crossings) > config.yamada_cap:
        raise CapExceeded(f"{len(crossings)} crossings exceeds the Yamada cap {config.yamada_cap}")
    by_graph: dict[tuple, dict[int, int]] = {}
    for values in itertools.product((1, -1, 0), repeat=len(crossings)):
        r = _resolve(code, dict(zip(crossings, values)))
        key = _graph_key(r.num_vertices, r.edges)
        slot = by_graph.setdefault(key, {})
        e = r.m_plus - r.m_minus
        slot[e] = slot.get(e, 0) + 1
    total = ZERO
    for key, weights in by_graph.items():
        total = total + LaurentPolynomial(weights) * _to_y(_h(key))
    return total


# ---------------------------------------------------------------------------
# Jaeger polynomial via bars
# ---------------------------------------------------------------------------

def jaeger(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT, every_arc: bool = False) -> PhiFraction:
    """Resolve one bar per band: R(B) = R(B+) + R(B-)/phi, with R(link) = <link>.

    ``every_arc`` puts a bar on every arc instead; the value is the same
    because two bars on one band resolve like a single bar.
    """
    B = bar_diagram(D, every_arc=every_arc)
    bands = sorted(B.bars)
    k = len(bands)
    num = ZERO
    for r in range(k + 1):
        for T in itertools.combinations(bands, r):
            leaf = B.base
            for b in T:
                leaf = turnback(leaf, b)
            num = num + bracket(leaf, config) * PHI ** (k - r)
    return PhiFraction(num, k)


def jaeger_via_yamada(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> PhiFraction:
    """-Y(D; A^4) / phi^(|E|-|V|+1) for a connected diagram."""
    verts, edges = D.abstract_graph()
    rank = len(edges) - len(verts) + 1 + D.free_loops
    return PhiFraction(-yamada(D, config).substitute_power(4), rank)
