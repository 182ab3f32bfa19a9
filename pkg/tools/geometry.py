"""Turn drawn coordinates of a spatial graph into a combinatorial code.

A drawing is given as vertex positions, the full centre line of every edge
(gaps bridged), and the pieces that are actually inked.  At each place where
two centre lines cross, the strand that is inked there is the overstrand.
Rotations at vertices come from the directions of the first segments.
"""

from __future__ import annotations

import math

from sgpoly.diagram import SpatialGraphDiagram

Point = tuple[float, float]


def _seg_intersection(p, q, r, s):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p, q, r, s
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < 1e-12:
        return None
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    u = -((x1 - x2) * (y1 - y3) - (y1 - y2) * (x1 - x3)) / den
    if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
        return t, u, (x1 + t * (x2 - x1), y1 + t * (y2 - y1))
    return None


def _dist_to_polyline(p, pts):
    best = math.inf
    for a, b in zip(pts, pts[1:]):
        ax, ay = a
        bx, by = b
        dx, dy = bx - ax, by - ay
        L = dx * dx + dy * dy
        t = 0 if L == 0 else max(0, min(1, ((p[0] - ax) * dx + (p[1] - ay) * dy) / L))
        best = min(best, math.hypot(p[0] - ax - t * dx, p[1] - ay - t * dy))
    return best


def _angle(v):
    return math.atan2(v[1], v[0]) % (2 * math.pi)


def build(vertices: dict[str, Point], edges: dict[str, tuple[str, str, list[Point]]],
          inked: list[list[Point]]):
    """``edges[e] = (tail, head, interior points)``; endpoints are the vertex positions."""
    # nudge interior points so that no crossing sits exactly on a corner
    paths = {}
    for k, (e, (t, h, mid)) in enumerate(sorted(edges.items())):
        pts = [(x + 1e-3 * (k + 1) * math.cos(j + k), y + 1e-3 * (k + 1) * math.sin(j + 2 * k))
               for j, (x, y) in enumerate(mid)]
        paths[e] = [vertices[t]] + pts + [vertices[h]]
    names = sorted(paths)
    found = []
    for i, e in enumerate(names):
        for f in names[i:]:
            P, Q = paths[e], paths[f]
            for a in range(len(P) - 1):
                for b in range(len(Q) - 1):
                    if e == f and abs(a - b) <= 1:
                        continue
                    if e == f and b < a:
                        continue
                    r = _seg_intersection(P[a], P[a + 1], Q[b], Q[b + 1])
                    if r:
                        t, u, pt = r
                        found.append((pt, (e, a + t, P[a], P[a + 1]), (f, b + u, Q[b], Q[b + 1])))
    passages: dict[str, list] = {e: [] for e in paths}
    for k, (pt, s1, s2) in enumerate(found):
        cid = f"x{k + 1}"
        # which strand is inked at pt: test points slightly along each strand
        def inked_near(seg):
            (_, _, a, b) = seg
            L = math.hypot(b[0] - a[0], b[1] - a[1])
            ux, uy = (b[0] - a[0]) / L, (b[1] - a[1]) / L
            probes = [(pt[0] + s * ux, pt[1] + s * uy) for s in (-0.6, 0.6)]
            return all(min(_dist_to_polyline(p, piece) for piece in inked) < 0.3 for p in probes)
        i1, i2 = inked_near(s1), inked_near(s2)
        if i1 == i2:
            raise ValueError(f"cannot decide over/under at {pt} ({s1[0]} vs {s2[0]}): {i1}, {i2}")
        under, upper = (s2, s1) if i1 else (s1, s2)
        du = (under[3][0] - under[2][0], under[3][1] - under[2][1])
        do = (upper[3][0] - upper[2][0], upper[3][1] - upper[2][1])
        a0 = _angle((-du[0], -du[1]))
        ap = (_angle(do) - a0) % (2 * math.pi)
        am = (_angle((-do[0], -do[1])) - a0) % (2 * math.pi)
        # slot 1 is the first over end counterclockwise from the under entry
        over_entry = 1 if am < ap else 3
        passages[under[0]].append((under[1], cid, 0))
        passages[upper[0]].append((upper[1], cid, over_entry))
    rot: dict[str, list] = {v: [] for v in vertices}
    for e, pts in paths.items():
        t, h = edges[e][0], edges[e][1]
        loop = t == h
        rot[t].append((_angle((pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])), e + (">" if loop else "")))
        rot[h].append((_angle((pts[-2][0] - pts[-1][0], pts[-2][1] - pts[-1][1])), e + ("<" if loop else "")))
    vert = {v: [e for _, e in sorted(ends)] for v, ends in rot.items()}
    edge_spec = {e: (edges[e][0], edges[e][1], [(c, s) for _, c, s in sorted(passages[e])]) for e in paths}
    return vert, edge_spec


def diagram(*args, **kw) -> SpatialGraphDiagram:
    vert, routes = build(*args, **kw)
    return SpatialGraphDiagram.build(vert, routes)


def k4_labels(center: str, h1: str, h2: str, h3: str) -> dict[frozenset, tuple[str, str, str]]:
    """Standard labels: a1..a3 leave the centre for h1..h3; a4: h2->h3, a5: h3->h1, a6: h1->h2."""
    routes = {"a1": (center, h1), "a2": (center, h2), "a3": (center, h3),
            "a4": (h2, h3), "a5": (h3, h1), "a6": (h1, h2)}
    return {frozenset(v): (e, *v) for e, v in routes.items()}


def k4_edges(labels, geometry: dict[tuple[str, str], list[Point]]):
    """Orient and name edges given geometry keyed by (from, to) vertex pairs."""
    out = {}
    for (u, v), mid in geometry.items():
        e, t, h = labels[frozenset((u, v))]
        out[e] = (t, h, list(mid) if (u, v) == (t, h) else list(reversed(mid)))
    return out
