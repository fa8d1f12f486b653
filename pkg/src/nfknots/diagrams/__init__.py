"""Planar diagrams: PD codes, a Morse-event diagram builder, parametric
builders (braid closures, plats, twist knots, pretzels, Whitehead doubles,
the two closure-tangle templates), and the named-knot catalog."""

from .pd import PDCode, Crossing, parse_pd, emit_pd
from .morse import MorseBuilder
from .builders import (
    braid_closure,
    plat_closure,
    twist_knot,
    pretzel,
    torus_2_bridge,
    whitehead_double_trefoil,
    tau_cable_unknot,
    tau_cable_trefoil,
)
from .catalog import catalog, catalog_names

__all__ = [
    "PDCode",
    "Crossing",
    "parse_pd",
    "emit_pd",
    "MorseBuilder",
    "braid_closure",
    "plat_closure",
    "twist_knot",
    "pretzel",
    "torus_2_bridge",
    "whitehead_double_trefoil",
    "tau_cable_unknot",
    "tau_cable_trefoil",
    "catalog",
    "catalog_names",
]
