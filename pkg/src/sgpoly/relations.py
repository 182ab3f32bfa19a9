"""Verifiers for the identities linking Jaeger, Yamada and Jones polynomials.

Each verifier recomputes both sides from the raw diagram and returns a
:class:`VerificationReport`.  Operands are never shared between the two
sides, so a fault in any stage shows up as an inequality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import ONE, ZERO, LaurentPolynomial, PhiFraction, PHI
from .diagram import (K4_EDGES, SpatialGraphDiagram, classify, delete_edges, double, k4_cycles)
from .invariants import DEFAULT, StateSumConfig, bracket, jaeger, jones
from .surfaces import (UnsupportedKind, associated_link, normalized_jaeger, normalized_yamada,
                       twist_parameters, twisted_parallel)

__all__ = [
    "VerificationReport", "KindMismatch", "constituent_thetas", "constituent_knots",
    "verify_theta_theorem", "verify_theta_jones_formula", "verify_k4_jones_formula",
    "verify_main_theorem", "verify_yamada_corollary", "verify_links_corollary",
    "verify_bar_expansion", "verify_knot_normalization", "K4_VERIFIERS", "THETA_VERIFIERS",
]


class KindMismatch(UnsupportedKind):
    pass


def _frac(x) -> PhiFraction:
    return x if isinstance(x, PhiFraction) else PhiFraction(x)


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    lhs: PhiFraction
    rhs: PhiFraction
    terms: Mapping[str, object] = field(default_factory=dict)
    side_checks: Mapping[str, bool] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs and all(self.side_checks.values())

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, (PhiFraction, LaurentPolynomial)):
                return _frac(v).to_json()
            if isinstance(v, Mapping):
                return {str(k): enc(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        return {"identity": self.identity, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
                "equal": self.equal, "side_checks": dict(self.side_checks), "terms": enc(dict(self.terms))}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __str__(self) -> str:
        mark = "equal" if self.equal else "NOT EQUAL"
        lines = [f"{self.identity}: {mark}", f"  lhs = {self.lhs}", f"  rhs = {self.rhs}"]
        lines += [f"  {k}: {'ok' if v else 'FAILED'}" for k, v in self.side_checks.items()]
        return "\n".join(lines)


def _require(D: SpatialGraphDiagram, kind: str) -> None:
    got = classify(D)
    if got != kind:
        raise KindMismatch(f"expected a {kind} diagram, got {got}")


def _x(n: int) -> LaurentPolynomial:
    """(-A^-4)^n"""
    return LaurentPolynomial.monomial(-4 * n, (-1) ** (n % 2))


def _scale(t: int) -> LaurentPolynomial:
    """(-A^4)^t"""
    return LaurentPolynomial.monomial(4 * t, (-1) ** (t % 2))


def constituent_thetas(D: SpatialGraphDiagram) -> dict[str, SpatialGraphDiagram]:
    """Theta-subgraph i is the K4 diagram with edge a_i removed."""
    return {e: delete_edges(D, [f for f in K4_EDGES if f != e]) for e in K4_EDGES}


def _cycle_name(c) -> str:
    return "l" + "".join(sorted(e[1:] for e in c))


def constituent_knots(D: SpatialGraphDiagram) -> dict[str, SpatialGraphDiagram]:
    """The seven cycles of a K4 (or three of a theta), as knot diagrams."""
    if classify(D) == "theta":
        es = D.edge_ids
        return {"|".join(sorted(set(es) - {e})): delete_edges(D, set(es) - {e}) for e in es}
    return {_cycle_name(c): delete_edges(D, c) for c in k4_cycles()}


def _bracket2(D: SpatialGraphDiagram, config) -> LaurentPolynomial:
    return bracket(double(D), config)


# ---------------------------------------------------------------------------
# theta-curves
# ---------------------------------------------------------------------------

def verify_theta_theorem(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """J~(theta) - V(L_theta) = (1/phi) sum J~(K_i) - 1/phi^2."""
    _require(D, "theta")
    jt = normalized_jaeger(D, config)
    v = jones(associated_link(D).link, config)
    knots = {k: normalized_jaeger(K, config) for k, K in constituent_knots(D).items()}
    rhs = sum(knots.values(), PhiFraction(0)).over_phi() - PhiFraction(1, 2)
    return VerificationReport("theta-theorem", jt - v, rhs,
                              {"normalized_jaeger": jt, "jones_associated": v, "knots": knots})


def verify_theta_jones_formula(D: SpatialGraphDiagram, params: Sequence[int] | None = None,
                               config: StateSumConfig = DEFAULT) -> VerificationReport:
    """V(L(m1,m2,m3)) against its expansion over <L> and the cycle 2-parallels.

    ``params`` overrides the twist counts (any integers for which the
    twisted surface stays orientable).
    """
    _require(D, "theta")
    es = D.edge_ids
    m = tuple(params) if params is not None else twist_parameters(D, "theta").params
    twisted = twisted_parallel(D, dict(zip(es, m)))
    lhs = jones(twisted, config)
    base = _bracket2(D, config)
    cycles = {e: _bracket2(delete_edges(D, set(es) - {e}), config) for e in es}
    first = sum(((ONE - _x(mi)) * cycles[e] for e, mi in zip(es, m)), ZERO)
    const = ONE * 2 - sum((_x(mi) for mi in m), ZERO) + _x(sum(m))
    rhs = (PhiFraction(base) + PhiFraction(first, 1) + PhiFraction(const, 2)) * _scale(sum(m))
    return VerificationReport("theta-jones", PhiFraction(lhs), rhs,
                              {"params": list(m), "bracket_L": base, "cycle_brackets": cycles})


# ---------------------------------------------------------------------------
# K4-graphs
# ---------------------------------------------------------------------------

_CYCLE3 = ("l126", "l234", "l135", "l456")
_CYCLE4 = ("l1245", "l1346", "l2356")


def verify_k4_jones_formula(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """Closed form of V(L(n1..n6)) over 14 brackets of untwisted band diagrams."""
    _require(D, "K4")
    n = dict(zip(K4_EDGES, twist_parameters(D, "K4").params))
    lhs = jones(associated_link(D).link, config)
    L = _bracket2(D, config)
    thetas = {e: _bracket2(T, config) for e, T in constituent_thetas(D).items()}
    cyc = {k: _bracket2(K, config) for k, K in constituent_knots(D).items()}
    x = {int(e[1:]): _x(v) for e, v in n.items()}
    N = {int(e[1:]): v for e, v in n.items()}

    def X(*idx):
        return _x(sum(N[i] for i in idx))

    first = sum(((ONE - x[i]) * thetas[f"a{i}"] for i in range(1, 7)), ZERO)
    second = (cyc["l126"] * (ONE * 2 - x[3] - x[4] - x[5] + X(3, 4, 5))
              + cyc["l234"] * (ONE * 2 - x[1] - x[5] - x[6] + X(1, 5, 6))
              + cyc["l135"] * (ONE * 2 - x[2] - x[4] - x[6] + X(2, 4, 6))
              + cyc["l456"] * (ONE * 2 - x[1] - x[2] - x[3] + X(1, 2, 3))
              + cyc["l1245"] * (ONE - x[3] - x[6] + X(3, 6))
              + cyc["l1346"] * (ONE - x[2] - x[5] + X(2, 5))
              + cyc["l2356"] * (ONE - x[1] - x[4] + X(1, 4)))
    third = (ONE * 6 - 2 * sum((x[i] for i in range(1, 7)), ZERO)
             + sum((X(i, i + 3) for i in range(1, 4)), ZERO)
             + X(3, 4, 5) + X(2, 4, 6) + X(1, 5, 6) + X(1, 2, 3) - X(1, 2, 3, 4, 5, 6))
    total = sum(N.values())
    rhs = (PhiFraction(L) + PhiFraction(first, 1) + PhiFraction(second, 2) + PhiFraction(third, 3)) * _scale(total)
    return VerificationReport("k4-jones", PhiFraction(lhs), rhs,
                              {"params": [N[i] for i in range(1, 7)], "bracket_L": L,
                               "theta_brackets": thetas, "cycle_brackets": cyc})


def verify_bar_expansion(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """J~(D) = (-A^4)^sum(n) [<L> + sum<Theta_i>/phi + (2 sum<t_j> + sum<q_k>)/phi^2 + 6/phi^3]."""
    _require(D, "K4")
    lhs = normalized_jaeger(D, config)
    total = twist_parameters(D, "K4").total
    L = _bracket2(D, config)
    thetas = {e: _bracket2(T, config) for e, T in constituent_thetas(D).items()}
    cyc = {k: _bracket2(K, config) for k, K in constituent_knots(D).items()}
    t = sum((cyc[k] for k in _CYCLE3), ZERO)
    q = sum((cyc[k] for k in _CYCLE4), ZERO)
    rhs = (PhiFraction(L) + PhiFraction(sum(thetas.values(), ZERO), 1)
           + PhiFraction(t * 2 + q, 2) + PhiFraction(6, 3)) * _scale(total)
    return VerificationReport("bar-expansion", lhs, rhs,
                              {"bracket_L": L, "theta_brackets": thetas, "cycle_brackets": cyc})


def verify_main_theorem(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """J~(Omega) = V(L) + (1/phi) sum J~(Theta_i) - (1/phi^2) sum J~(l_j) + 1/phi^3."""
    _require(D, "K4")
    lhs = normalized_jaeger(D, config)
    v = jones(associated_link(D).link, config)
    thetas = {e: normalized_jaeger(T, config) for e, T in constituent_thetas(D).items()}
    knots = {k: normalized_jaeger(K, config) for k, K in constituent_knots(D).items()}
    st = sum(thetas.values(), PhiFraction(0))
    sk = sum(knots.values(), PhiFraction(0))
    rhs = PhiFraction(v) + st.over_phi() - sk.over_phi(2) + PhiFraction(1, 3)
    return VerificationReport("main", lhs, rhs,
                              {"jones_associated": v, "thetas": thetas, "knots": knots,
                               "sum_thetas": st, "sum_knots": sk, "difference": lhs - PhiFraction(v)})


def verify_yamada_corollary(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """Y~(Omega; A^4) + phi^3 V(L) = sum Y~(Theta_i; A^4) - sum Y~(l_j; A^4) - 1."""
    _require(D, "K4")
    y = normalized_yamada(D, config).substitute_power(4)
    v = jones(associated_link(D).link, config)
    thetas = {e: normalized_yamada(T, config).substitute_power(4) for e, T in constituent_thetas(D).items()}
    knots = {k: normalized_yamada(K, config).substitute_power(4) for k, K in constituent_knots(D).items()}
    lhs = y + PHI ** 3 * v
    rhs = sum(thetas.values(), ZERO) - sum(knots.values(), ZERO) - ONE
    return VerificationReport("yamada-corollary", PhiFraction(lhs), PhiFraction(rhs),
                              {"normalized_yamada_A4": y, "jones_associated": v, "thetas": thetas, "knots": knots})


def verify_links_corollary(D: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """J~(Omega) = V(L) + (1/phi) sum V(L_i) + (1/phi^2)(2 sum V(L_t) + sum V(L_q)) + 6/phi^3.

    L_i is the associated link of theta-subgraph i; L_c is the 2-parallel of
    cycle c carrying the sum of the K4 twist counts along c.
    """
    _require(D, "K4")
    lhs = normalized_jaeger(D, config)
    n = dict(zip(K4_EDGES, twist_parameters(D, "K4").params))
    v = jones(associated_link(D).link, config)
    thetas = {e: jones(associated_link(T).link, config) for e, T in constituent_thetas(D).items()}
    cyc = {}
    for c in k4_cycles():
        K = delete_edges(D, c)
        (band,) = K.edge_ids
        cyc[_cycle_name(c)] = jones(twisted_parallel(K, {band: sum(n[e] for e in c)}), config)
    t = sum((cyc[k] for k in _CYCLE3), ZERO)
    q = sum((cyc[k] for k in _CYCLE4), ZERO)
    rhs = (PhiFraction(v) + PhiFraction(sum(thetas.values(), ZERO), 1)
           + PhiFraction(t * 2 + q, 2) + PhiFraction(6, 3))
    return VerificationReport("links-corollary", lhs, rhs,
                              {"jones_associated": v, "theta_links": thetas, "cycle_links": cyc})


# ---------------------------------------------------------------------------
# knots
# ---------------------------------------------------------------------------

def verify_knot_normalization(K: SpatialGraphDiagram, config: StateSumConfig = DEFAULT) -> VerificationReport:
    """J(K) = <K^(2)> + 1/phi, and J~(K) - V(L_K) = 1/phi.

    The report's sides are the second identity; the first is a side check.
    """
    _require(K, "knot")
    j = jaeger(K, config)
    b = _bracket2(K, config)
    first = j == PhiFraction(b) + PhiFraction(1, 1)
    jt = normalized_jaeger(K, config)
    v = jones(associated_link(K).link, config)
    lhs = jt - PhiFraction(v)
    return VerificationReport("knot-normalization", lhs, PhiFraction(1, 1),
                              {"jaeger": j, "double_bracket": b, "normalized_jaeger": jt, "jones_associated": v},
                              {"jaeger = <K2> + 1/phi": first})


K4_VERIFIERS = {
    "main": verify_main_theorem,
    "yamada": verify_yamada_corollary,
    "links": verify_links_corollary,
    "bar": verify_bar_expansion,
    "jones-k4": verify_k4_jones_formula,
}

THETA_VERIFIERS = {
    "theta": verify_theta_theorem,
    "theta-jones": verify_theta_jones_formula,
}
