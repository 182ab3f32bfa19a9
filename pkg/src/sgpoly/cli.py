"""Command-line front end.

Exit codes:
  0  success
  1  input could not be loaded or failed validation
  2  a crossing cap was exceeded
  3  an identity or table row did not match
  4  the requested identity does not apply to this kind of diagram
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .algebra import PhiFraction, parse_polynomial
from .diagram import DiagramError, LinkDiagram, SpatialGraphDiagram, double, to_dict
from .invariants import CapExceeded, StateSumConfig, bracket, jaeger, jones, yamada
from .relations import K4_VERIFIERS, THETA_VERIFIERS, KindMismatch, verify_knot_normalization
from .surfaces import (UnsupportedKind, associated_link, normalized_jaeger, normalized_jaeger_knot,
                       normalized_yamada, twist_parameters)

EXIT_OK, EXIT_LOAD, EXIT_CAP, EXIT_IDENTITY, EXIT_KIND = 0, 1, 2, 3, 4

IDENTITIES = ("all", "main", "yamada", "links", "bar", "jones-k4", "theta", "theta-jones", "knot")


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _load(name_or_path: str) -> catalog.CatalogEntry:
    try:
        return catalog.load(name_or_path)
    except (DiagramError, OSError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        lines = msg if isinstance(msg, list) else [str(msg)]
        raise _Exit(EXIT_LOAD, "\n".join(f"error: {line}" for line in lines)) from exc


def _crossings(D) -> int:
    if isinstance(D, SpatialGraphDiagram):
        return len(D.crossings)
    return sum(1 for n in D.nodes if n.kind == "crossing")


def _config() -> StateSumConfig:
    return StateSumConfig.from_env()


def _fmt(x) -> str:
    if isinstance(x, PhiFraction) and x.phi_power == 0:
        return str(x.num)
    return str(x)


def invariants_record(entry: catalog.CatalogEntry, config: StateSumConfig) -> dict:
    """Every applicable invariant, as text polynomials (readable by the parsers)."""
    D = entry.diagram
    kind = entry.kind
    rec: dict = {"name": entry.name, "kind": kind, "crossings": _crossings(D)}
    if isinstance(D, LinkDiagram) or kind == "link":
        L = D if isinstance(D, LinkDiagram) else None
        if L is None:
            raise UnsupportedKind("a spatial graph without vertices has no invariants here")
        rec["bracket"] = str(bracket(L, config))
        if L.heads is not None:
            rec["jones"] = str(jones(L, config))
        return rec
    rec["yamada"] = str(yamada(D, config))
    rec["jaeger"] = _fmt(jaeger(D, config))
    if kind in ("K4", "theta"):
        td = twist_parameters(D, kind)
        rec["edges"] = list(td.edges)
        rec["w"] = td.matrix()
        rec["n" if kind == "K4" else "m"] = list(td.params)
        rec["yamada_normalized"] = str(normalized_yamada(D, config))
        rec["jaeger_normalized"] = _fmt(normalized_jaeger(D, config))
        rec["associated_jones"] = str(jones(associated_link(D, td).link, config))
    elif kind == "knot":
        td = twist_parameters(D, kind)
        rec["twist"] = list(td.params)
        rec["jaeger_normalized"] = _fmt(normalized_jaeger_knot(D, config))
    return rec


_LABELS = {
    "yamada": "Y", "jaeger": "J", "yamada_normalized": "Y~", "jaeger_normalized": "J~",
    "associated_jones": "V(L)", "bracket": "<L>", "jones": "V",
}


def _render(rec: dict) -> str:
    lines = [f"{rec['name']} ({rec['kind']}, {rec['crossings']} crossings)"]
    for k, v in rec.items():
        if k in ("name", "kind", "crossings"):
            continue
        if k == "w":
            lines.append("w =")
            lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in v]
        elif isinstance(v, list):
            lines.append(f"{k} = [{', '.join(str(x) for x in v)}]")
        else:
            lines.append(f"{_LABELS.get(k, k)} = {v}")
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    entry = _load(args.diagram)
    cap = args.max_crossings
    if cap is not None and _crossings(entry.diagram) > cap:
        raise _Exit(EXIT_CAP, f"error: {_crossings(entry.diagram)} crossings exceed --max-crossings {cap}")
    rec = invariants_record(entry, _config())
    print(json.dumps(rec, ensure_ascii=False) if args.json else _render(rec))
    return EXIT_OK


def _verifiers(kind: str, identity: str):
    if kind == "K4":
        table = dict(K4_VERIFIERS)
    elif kind == "theta":
        table = dict(THETA_VERIFIERS)
    elif kind == "knot":
        table = {"knot": verify_knot_normalization}
    else:
        raise _Exit(EXIT_KIND, f"error: no identities are defined for a {kind} diagram")
    if identity == "all":
        return list(table.items())
    if identity not in table:
        raise _Exit(EXIT_KIND, f"error: identity {identity!r} does not apply to a {kind} diagram "
                               f"(available: {', '.join(table)})")
    return [(identity, table[identity])]


def cmd_verify(args) -> int:
    entry = _load(args.diagram)
    config = _config()
    failed = False
    reports = []
    for name, fn in _verifiers(entry.kind, args.identity):
        try:
            rep = fn(entry.diagram, config=config)
        except KindMismatch as exc:
            raise _Exit(EXIT_KIND, f"error: {exc}") from exc
        reports.append(rep)
        failed |= not rep.equal
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        print("\n".join(str(r) for r in reports))
        if failed:
            for r in reports:
                if not r.equal:
                    print(f"difference in {r.identity}: lhs - rhs = {r.lhs - r.rhs}")
    return EXIT_IDENTITY if failed else EXIT_OK


def cmd_table1(args) -> int:
    config = _config()
    bad = 0
    print(f"{'diagram':<8}  {'k':>3}  result  Y(A)")
    for name in catalog.OMEGAS:
        source = name
        if args.data:
            source = f"{args.data.rstrip('/')}/{name}.json"
        expected = parse_polynomial(catalog.TABLE1[name])
        try:
            got = yamada(_load(source).diagram, config)
        except _Exit as exc:
            print(f"{name:<8}  {'-':>3}  FAIL    {exc}")
            bad += 1
            continue
        k = expected.unit_equivalent(got)
        ok = k is not None
        bad += not ok
        print(f"{name:<8}  {k if ok else '-':>3}  {'pass' if ok else 'FAIL'}    {got}")
    print(f"{len(catalog.OMEGAS) - bad}/{len(catalog.OMEGAS)} rows match")
    return EXIT_IDENTITY if bad else EXIT_OK


def cmd_catalog(args) -> int:
    for name in catalog.names():
        e = catalog.load(name)
        print(f"{name:<14} {e.kind:<6} {_crossings(e.diagram):>3}  {e.provenance}")
    return EXIT_OK


def cmd_double(args) -> int:
    entry = _load(args.diagram)
    if not isinstance(entry.diagram, SpatialGraphDiagram):
        raise _Exit(EXIT_KIND, "error: doubling needs a spatial graph diagram")
    print(json.dumps(to_dict(double(entry.diagram))))
    return EXIT_OK


def cmd_associated_link(args) -> int:
    entry = _load(args.diagram)
    if entry.kind not in ("K4", "theta"):
        raise _Exit(EXIT_KIND, f"error: associated links are built for K4 and theta diagrams, not {entry.kind}")
    al = associated_link(entry.diagram)
    out = to_dict(al.link)
    out["half_twists"] = dict(al.half_twists)
    out["writhe"] = al.writhe
    print(json.dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgpoly", description="Polynomial invariants of spatial graph diagrams.",
                                epilog="exit codes: 1 load error, 2 cap exceeded, 3 mismatch, 4 wrong kind")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="compute every invariant that applies to a diagram")
    s.add_argument("diagram", help="catalog name or JSON file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--max-crossings", type=int, metavar="N", help="refuse inputs with more than N crossings")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("verify", help="check the identities relating the invariants")
    s.add_argument("diagram")
    s.add_argument("--identity", choices=IDENTITIES, default="all")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table1", help="recompute the Yamada polynomials of omega1..omega10")
    s.add_argument("--data", metavar="DIR", help="read omegaN.json from DIR instead of the catalog")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("catalog", help="shipped diagrams")
    cs = s.add_subparsers(dest="action", required=True)
    cs.add_parser("list").set_defaults(func=cmd_catalog)

    s = sub.add_parser("double", help="print the blackboard 2-parallel as JSON")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("associated-link", help="print the associated link as JSON")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_associated_link)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(str(exc), file=sys.stderr)
        return exc.code
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UnsupportedKind as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_KIND


if __name__ == "__main__":
    sys.exit(main())
