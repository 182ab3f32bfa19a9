"""Recompute the Yamada polynomials of the ten catalogued K4-curves.

Run:  python3 demos/yamada_table.py
"""

from sgpoly import TABLE1, load_catalog, parse_polynomial, yamada

for name, text in TABLE1.items():
    D = load_catalog(name).diagram
    got = yamada(D)
    k = parse_polynomial(text).unit_equivalent(got)
    status = "exact" if k == 0 else (f"(-A)^{k}" if k is not None else "MISMATCH")
    print(f"{name:8s} {len(D.crossings)} crossings  {status:8s} {got}")
