"""Polynomial invariants of spatial graph diagrams.

Exact Laurent-polynomial arithmetic, diagram codes with doubling and half
twists, the Kauffman bracket, Jones, Yamada and Jaeger polynomials, the
zero-form band surfaces of theta- and K4-curves, and checks of the identities
that tie these together.
"""

from .algebra import A, LOOP, ONE, PHI, ZERO, LaurentPolynomial, PhiFraction, parse_fraction, parse_polynomial
from .catalog import TABLE1, CatalogEntry, CatalogError
from .catalog import load as load_catalog
from .catalog import names as catalog_names
from .diagram import (DiagramError, LinkDiagram, SpatialGraphDiagram, classify, delete_edges, double,
                      insert_half_twists, knot_from_pd, link_from_pd, load_json, dump_json, mirror, writhe)
from .invariants import (CapExceeded, StateSumConfig, bracket, jaeger, jones, kauffman_bracket,
                         kauffman_bracket_skein, yamada)
from .relations import (VerificationReport, verify_bar_expansion, verify_k4_jones_formula,
                        verify_knot_normalization, verify_links_corollary, verify_main_theorem,
                        verify_theta_jones_formula, verify_theta_theorem, verify_yamada_corollary)
from .surfaces import (associated_link, crossing_matrix, normalized_jaeger, normalized_jaeger_knot,
                       normalized_yamada, twist_parameters)

__version__ = "0.1.0"

__all__ = [
    "A", "LOOP", "ONE", "PHI", "ZERO", "LaurentPolynomial", "PhiFraction", "parse_fraction", "parse_polynomial",
    "TABLE1", "CatalogEntry", "CatalogError", "load_catalog", "catalog_names",
    "DiagramError", "LinkDiagram", "SpatialGraphDiagram", "classify", "delete_edges", "double",
    "insert_half_twists", "knot_from_pd", "link_from_pd", "load_json", "dump_json", "mirror", "writhe",
    "CapExceeded", "StateSumConfig", "bracket", "jaeger", "jones", "kauffman_bracket", "kauffman_bracket_skein",
    "yamada", "VerificationReport", "verify_bar_expansion", "verify_k4_jones_formula", "verify_knot_normalization",
    "verify_links_corollary", "verify_main_theorem", "verify_theta_jones_formula", "verify_theta_theorem",
    "verify_yamada_corollary", "associated_link", "crossing_matrix", "normalized_jaeger", "normalized_jaeger_knot",
    "normalized_yamada", "twist_parameters",
]
