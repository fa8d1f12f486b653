"""Named-knot catalog backed by a versioned data file.

Entries are stored as PD text plus frozen invariant values used as
load-time integrity checks.  T(2,k) names are served parametrically.
"""

from __future__ import annotations

import json
import re
from importlib import resources

from .pd import parse_pd
from .builders import torus_2_bridge

_CATALOG = None
_T2K = re.compile(r"T\(2,(-?\d+)\)$")


class CatalogError(Exception):
    pass


def _load():
    global _CATALOG
    if _CATALOG is None:
        path = resources.files("nfknots.data").joinpath("catalog.json")
        data = json.loads(path.read_text())
        if data.get("version") != 1:
            raise CatalogError(f"unsupported catalog version {data.get('version')}")
        _CATALOG = data["knots"]
    return _CATALOG


def catalog_names():
    return sorted(_load()) + ["T(2,k)"]


def catalog(name):
    """PD code for a named knot; raises CatalogError for unknown names."""
    m = _T2K.match(name)
    if m:
        return torus_2_bridge(int(m.group(1)))
    table = _load()
    if name not in table:
        raise CatalogError(f"unknown catalog name {name!r}; have {catalog_names()}")
    entry = table[name]
    if not entry["pd"]:
        from .morse import MorseBuilder
        b = MorseBuilder()
        b.cup(1).cap(1)
        return b.build()
    return parse_pd(entry["pd"])


def catalog_entry(name):
    """The raw stored record (pd text and frozen check values)."""
    table = _load()
    if name not in table:
        raise CatalogError(f"unknown catalog name {name!r}")
    return dict(table[name])
