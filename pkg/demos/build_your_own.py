"""Enter a spatial graph by hand and push it through the pipeline.

A diagram is given by the counterclockwise order of edge ends at each vertex
and, for each edge, the crossings it passes with the slot it enters by.
Slots 0 and 2 of a crossing carry the understrand.  Below is a theta-curve
whose first edge ties a trefoil.
"""

import json
import tempfile

from sgpoly import SpatialGraphDiagram, dump_json, load_catalog, twist_parameters, verify_theta_theorem, yamada
from sgpoly.cli import main

D = SpatialGraphDiagram.build(
    {"u": ["e1", "e2", "e3"], "v": ["e3", "e2", "e1"]},
    {
        "e1": ("u", "v", [("x1", 0), ("x2", 3), ("x3", 0), ("x1", 3), ("x2", 0), ("x3", 3)]),
        "e2": ("u", "v", []),
        "e3": ("u", "v", []),
    },
    name="trefoil-theta",
)
print("Y =", yamada(D))
print("twists:", twist_parameters(D).params)
print(verify_theta_theorem(D))

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(dump_json(D))
print("\nsame thing from the command line:")
main(["invariants", fh.name])

print("\nthe shipped trefoil, as JSON:")
print(json.dumps(json.loads(dump_json(load_catalog("trefoil").diagram))["edges"]))
