"""Curated diagrams shipped with the package.

Each entry is a JSON file in ``sgpoly/data`` holding the diagram code plus a
short provenance note and whatever reference values are known for it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping

from .algebra import parse_fraction, parse_polynomial
from .diagram import DiagramError, LinkDiagram, SpatialGraphDiagram, classify, from_dict, to_dict

__all__ = ["CatalogEntry", "load", "names", "save", "dumps", "TABLE1", "OMEGAS", "CatalogError"]

# Yamada polynomials of Omega_1 .. Omega_10
TABLE1 = {
    "omega1": "A^3+2A+2A^-1+A^-3",
    "omega2": "A^8+A^6+A^5-A^4+A^3-2A^2+A-1+A^-1+A^-2+A^-3+A^-4+A^-5",
    "omega3": "2A^6+A^4+A^3-2A^2-4-A^-1-3A^-2-A^-3+A^-7",
    "omega4": "A^8-A^7+A^6-A^4+A^3-2A^2+A-2-A^-2-A^-3-A^-4-A^-6",
    "omega5": "A^8-A^7+A^6-A^5-A^4-2A^2+A-1+2A^-1+A^-2+2A^-3+A^-4+2A^-5+A^-7",
    "omega6": "A^7-A^6+A^4+A^2+3A+3A^-1-A^-2+A^-3-A^-4-2A^-5+A^-6-A^-7+A^-9",
    "omega7": "-A^8-A^5+A^4+A^3+3A+3A^-1+A^-3+A^-4-A^-5-A^-8",
    "omega8": "A^9-A^8+2A^6-A^5+A^4+2A^3-A^2+2A-2+A^-1-A^-2-A^-3+2A^-4+2A^-7",
    "omega9": "-A^8+A^7-A^5+2A^4+2A-1+2A^-1-A^-2+A^-3+A^-4-A^-5+A^-6+A^-7-A^-8+A^-9",
    "omega10": "A^9-A^8+A^7-A^5+A^4+2A+2A^-1+A^-4-A^-5+A^-7-A^-8+A^-9",
}
OMEGAS = tuple(TABLE1)

_DATA = "data"


class CatalogError(DiagramError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diagram: SpatialGraphDiagram | LinkDiagram
    provenance: str = ""
    expected: Mapping[str, object] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return classify(self.diagram)

    def expected_polynomial(self, key: str):
        return parse_polynomial(self.expected[key])

    def expected_fraction(self, key: str):
        return parse_fraction(self.expected[key])

    def to_dict(self) -> dict:
        data = to_dict(self.diagram)
        data["name"] = self.name
        data["provenance"] = self.provenance
        data["expected"] = dict(self.expected)
        return data


def _data_dir():
    return resources.files(__package__).joinpath(_DATA)


def names() -> list[str]:
    """Names of the shipped entries, Omegas first in order."""
    found = sorted(p.name[:-5] for p in _data_dir().iterdir() if p.name.endswith(".json"))
    omegas = [n for n in OMEGAS if n in found]
    return omegas + [n for n in found if n not in omegas]


def _from_text(text: str, fallback_name: str, source: str) -> CatalogEntry:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise CatalogError(f"{source}: top level must be an object")
    try:
        D = from_dict(data, text)
    except DiagramError as exc:
        problems = exc.args[0] if exc.args and isinstance(exc.args[0], list) else [str(exc)]
        raise CatalogError([f"{source}: {p}" for p in problems]) from exc
    name = str(data.get("name") or fallback_name)
    if isinstance(D, SpatialGraphDiagram) and not D.name:
        D = SpatialGraphDiagram(D.vertices, D.crossings, D.edges, D.free_loops, name)
    return CatalogEntry(name, D, str(data.get("provenance", "")), dict(data.get("expected", {})))


def load(name_or_path: str) -> CatalogEntry:
    """Load a shipped entry by name, or any diagram file by path."""
    if os.path.exists(name_or_path):
        with open(name_or_path, encoding="utf-8") as fh:
            text = fh.read()
        base = os.path.splitext(os.path.basename(name_or_path))[0]
        return _from_text(text, base, name_or_path)
    res = _data_dir().joinpath(f"{name_or_path}.json")
    if not res.is_file():
        raise CatalogError(f"no catalog entry or file named {name_or_path!r}")
    return _from_text(res.read_text(encoding="utf-8"), name_or_path, f"{name_or_path}.json")


def dumps(entry: CatalogEntry) -> str:
    """JSON text with one node, arc or edge per line, so loader messages can cite lines."""
    data = entry.to_dict()
    out = ["{"]
    keys = list(data)
    for i, k in enumerate(keys):
        comma = "," if i < len(keys) - 1 else ""
        v = data[k]
        if k in ("nodes", "arcs") and v:
            rows = ",\n  ".join(json.dumps(x, ensure_ascii=False) for x in v)
            out.append(f' "{k}": [\n  {rows}\n ]{comma}')
        elif k in ("edges", "expected") and v:
            rows = ",\n  ".join(f"{json.dumps(a)}: {json.dumps(b, ensure_ascii=False)}" for a, b in v.items())
            out.append(f' "{k}": {{\n  {rows}\n }}{comma}')
        else:
            out.append(f" {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}{comma}")
    out.append("}")
    return "\n".join(out) + "\n"


def save(entry: CatalogEntry, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(entry))
