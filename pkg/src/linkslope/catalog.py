"""Bundled example links and surface data with their expected invariants.

Each entry carries one or more input formats (a PD diagram, a group
presentation, clasp-surface data) plus a registry of expected values
(linking numbers, slope formulas, signatures) that the regression suite
reproduces.  The environment variable ``SLOPE_CATALOG`` points the loader
at an alternative JSON file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources

from .diagram import ColoredDiagram, Presentation, parse_pd
from .errors import ParseError, PreconditionError
from .seifert import CComplexData

__all__ = ["CatalogEntry", "catalog_path", "load_catalog", "get_entry",
           "entry_names", "ENV_VAR"]

ENV_VAR = "SLOPE_CATALOG"


@dataclass
class CatalogEntry:
    name: str
    kind: str                       # primary format: pd | presentation | ccomplex
    payload: dict
    expected: dict = field(default_factory=dict)
    aliases: tuple = ()
    notes: str = ""

    def formats(self) -> list:
        return [k for k in ("pd", "presentation", "ccomplex") if k in self.payload]

    def has_format(self, fmt: str) -> bool:
        return fmt in self.payload

    def diagram(self) -> ColoredDiagram:
        if "pd" not in self.payload:
            raise PreconditionError(f"entry {self.name} has no diagram payload")
        return parse_pd(json.dumps(self.payload["pd"]))

    def presentation(self) -> Presentation:
        if "presentation" not in self.payload:
            raise PreconditionError(f"entry {self.name} has no presentation payload")
        return Presentation.from_json(self.payload["presentation"])

    def ccomplex(self) -> CComplexData:
        if "ccomplex" not in self.payload:
            raise PreconditionError(
                f"entry {self.name} has no clasp-surface payload")
        return CComplexData.from_json(self.payload["ccomplex"])

    def source(self, fmt: str | None = None):
        """The parsed object for fmt (default: the entry's primary kind)."""
        fmt = fmt or self.kind
        if fmt == "pd":
            return self.diagram()
        if fmt == "presentation":
            return self.presentation()
        if fmt == "ccomplex":
            return self.ccomplex()
        raise ParseError(f"unknown format {fmt!r}")


def catalog_path() -> str:
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return str(resources.files("linkslope").joinpath("data/catalog.json"))


def load_catalog(path: str | None = None) -> dict:
    path = path or catalog_path()
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read catalog {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad catalog JSON in {path}: {exc}") from exc
    entries = {}
    for obj in raw.get("entries", []):
        try:
            entry = CatalogEntry(
                name=obj["name"],
                kind=obj["kind"],
                payload=obj["payload"],
                expected=obj.get("expected", {}),
                aliases=tuple(obj.get("aliases", ())),
                notes=obj.get("notes", ""),
            )
        except KeyError as exc:
            raise ParseError(f"catalog entry missing field {exc}") from exc
        if entry.kind not in ("pd", "presentation", "ccomplex"):
            raise ParseError(f"entry {entry.name}: unknown kind {entry.kind!r}")
        if entry.kind not in entry.payload:
            raise ParseError(
                f"entry {entry.name}: payload lacks its primary kind {entry.kind!r}")
        entries[entry.name] = entry
    return entries


def entry_names(catalog: dict | None = None) -> list:
    catalog = catalog if catalog is not None else load_catalog()
    return sorted(catalog)


def get_entry(name: str, catalog: dict | None = None) -> CatalogEntry:
    catalog = catalog if catalog is not None else load_catalog()
    if name in catalog:
        return catalog[name]
    folded = name.casefold()
    for entry in catalog.values():
        if entry.name.casefold() == folded:
            return entry
        if any(a.casefold() == folded for a in entry.aliases):
            return entry
    raise ParseError(f"no catalog entry named {name!r} "
                     f"(have: {', '.join(sorted(catalog))})")
