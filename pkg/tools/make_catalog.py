"""Regenerate the JSON files in src/sgpoly/data from the hand transcriptions."""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import transcriptions as T  # noqa: E402

from sgpoly.catalog import TABLE1, CatalogEntry, load, save  # noqa: E402
from sgpoly.diagram import SpatialGraphDiagram, knot_from_pd, link_from_pd  # noqa: E402
from sgpoly.invariants import yamada  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "sgpoly", "data")

EXTRA = {
    "omega1": {
        "jaeger_normalized": "-(A^12+2A^4+2A^-4+A^-12)/phi^3",
        "associated_jones": "-(A^6+3A^2+3A^-2+A^-6)",
    },
    "omega7": {
        "associated_jones": ("A^30-2A^26+A^22+A^18-3A^14+3A^10-3A^6-2A^2-2A^-2-3A^-6+3A^-10"
                             "-3A^-14+A^-18+A^-22-2A^-26+A^-30"),
    },
}

PROVENANCE = {
    "omega": "K4 diagram; code transcribed from a drawing with edges labelled a1..a6",
    "theta-planar": "planar theta-curve",
    "theta-tilde": "theta-curve with four crossings; the theta obtained from omega7 by deleting a1",
}


def entries():
    for name, (vert, routes) in T.codes().items():
        D = SpatialGraphDiagram.build(vert, routes, name=name)
        yield CatalogEntry(name, D, PROVENANCE["omega"], {"yamada": TABLE1[name], **EXTRA.get(name, {})})
    th = T.theta_codes()
    yield CatalogEntry("theta-planar", SpatialGraphDiagram.build(*th["theta-planar"], name="theta-planar"),
                       PROVENANCE["theta-planar"],
                       {"yamada": "-A^2-A-2-A^-1-A^-2", "jaeger": "(A^8+A^4+2+A^-4+A^-8)/phi^2"})
    yield CatalogEntry("theta-tilde", SpatialGraphDiagram.build(*th["theta-tilde"], name="theta-tilde"),
                       PROVENANCE["theta-tilde"], {"yamada": "A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8"})
    yield CatalogEntry("unknot", SpatialGraphDiagram.build({"v": ["k>", "k<"]}, {"k": ("v", "v", [])},
                                                           name="unknot"),
                       "round circle with one 2-valent vertex", {"jaeger": "(-A^4-1-A^-4)/phi"})
    yield CatalogEntry("unknot-kink", SpatialGraphDiagram.build(
        {"v": ["k>", "k<"]}, {"k": ("v", "v", [("x", 0), ("x", 3)])}, name="unknot-kink"),
        "circle with one Reidemeister I kink", {})
    yield CatalogEntry("trefoil", knot_from_pd([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)], "trefoil"),
                       "standard three-crossing trefoil from its PD code", {})
    yield CatalogEntry("figure-eight", knot_from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
                                                    "figure-eight"),
                       "figure-eight knot from its PD code",
                       {"bracket_2parallel": "-A^26+A^22-A^2-A^-2+A^-22-A^-26"})
    yield CatalogEntry("hopf", link_from_pd([(4, 1, 3, 2), (2, 3, 1, 4)]), "Hopf link from its PD code",
                       {"bracket": "-A^4-A^-4"})
    vert, routes = T.codes()["omega1"]
    routes = dict(routes)
    t, h, ps = routes["a1"]
    routes["a1"] = (t, h, list(ps) + [("k", 0), ("k", 3)])
    yield CatalogEntry("omega1-kink", SpatialGraphDiagram.build(vert, routes, name="omega1-kink"),
                       "omega1 with a Reidemeister I kink added on edge a1", {})


def main():
    os.makedirs(OUT, exist_ok=True)
    for e in entries():
        path = os.path.join(OUT, f"{e.name}.json")
        save(e, path)
        back = load(path)
        assert back.to_dict() == e.to_dict(), e.name
        if e.name in TABLE1:
            y = yamada(back.diagram)
            assert y == back.expected_polynomial("yamada"), (e.name, y)
        print("wrote", e.name, back.kind)


if __name__ == "__main__":
    main()
