"""Half twists on a band and what they do to the bracket.

A band with n half twists expands as b_n = A^n b_0 + f_n b_inf, where b_inf
is the band cut open.  On a theta-curve any twist vector whose entries share
a parity gives an orientable surface; mixed parity does not.
"""

from sgpoly import LaurentPolynomial, bracket, double, insert_half_twists, load_catalog, verify_theta_jones_formula
from sgpoly.diagram import DiagramError, turnback
from sgpoly.surfaces import f_coefficient, twisted_parallel

theta = load_catalog("theta-planar").diagram
L = double(theta)
b0, binf = bracket(L), bracket(turnback(L, "e1"))
for n in range(-3, 4):
    bn = bracket(insert_half_twists(L, "e1", n))
    ok = bn == LaurentPolynomial.monomial(n) * b0 + f_coefficient(n) * binf
    print(f"n={n:+d}  f_n = {str(f_coefficient(n)):14s} expansion holds: {ok}")

print()
for m in [(0, 0, 0), (2, 0, -2), (1, 1, 1), (3, -1, 1)]:
    comps = twisted_parallel(theta, dict(zip(("e1", "e2", "e3"), m))).num_components()
    rep = verify_theta_jones_formula(theta, params=m)
    print(f"twists {m}: boundary has {comps} component(s); Jones expansion equal: {rep.equal}")

try:
    twisted_parallel(theta, {"e1": 1})
except DiagramError as exc:
    print("twists (1, 0, 0):", exc)
