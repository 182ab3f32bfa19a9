"""The planar K4: every piece of the decomposition by hand.

For a crossing-free K4 all twist numbers vanish, the associated link is four
unlinked circles and every constituent is planar, so each term can be
checked against a closed form.
"""

from sgpoly import (PhiFraction, associated_link, jones, load_catalog, normalized_jaeger, twist_parameters,
                    verify_main_theorem)

D = load_catalog("omega1").diagram
print("twist numbers:", twist_parameters(D).params)

J = normalized_jaeger(D)
V = jones(associated_link(D).link)
print("J~     =", J)
print("V(L)   =", V, "(four trivial components: (-A^2-A^-2)^3)")
print("J~ - V =", J - PhiFraction(V))

rep = verify_main_theorem(D)
print()
print(rep)
print("sum over thetas:", rep.terms["sum_thetas"])
print("sum over cycles:", rep.terms["sum_knots"])
