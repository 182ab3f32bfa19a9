"""A K4-curve with a figure-eight cycle.

omega7 has four crossings.  Deleting a1 or a4 leaves a knotted theta, the
cycle through a2, a3, a5, a6 is a figure-eight knot, and the surface with
vanishing Seifert form needs a full twist on a1 and an opposite one on a4.
"""

import time

from sgpoly import (associated_link, bracket, crossing_matrix, delete_edges, double, load_catalog,
                    verify_main_theorem)

D = load_catalog("omega7").diagram

w = {k: v for k, v in crossing_matrix(D).items() if v}
print("nonzero crossing sums:", w)

al = associated_link(D)
print("half twists per band:", al.half_twists)
print("associated link:", al.link.num_crossings(), "crossings,", al.link.num_components(), "components,",
      "writhe", al.writhe)

fig8 = delete_edges(D, ["a2", "a3", "a5", "a6"])
print("<figure-eight 2-parallel> =", bracket(double(fig8)))

t0 = time.perf_counter()
rep = verify_main_theorem(D)
print(f"\nmain identity ({time.perf_counter() - t0:.1f}s)")
print(rep)
for e, x in rep.terms["thetas"].items():
    print(f"  theta without {e}: {x}")
for c, x in rep.terms["knots"].items():
    print(f"  cycle {c}: {x}")
