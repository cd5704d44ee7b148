"""Combinatorial calculus of rectangular diagrams of surfaces."""

from .grid import (Rect, SurfaceDiagram, LinkDiagram, ValidityReport, GridError,
                   classify_intersection, validate, boundary, canonicalize,
                   canonical, compact, same_up_to_rescaling, diagram,
                   UP, DOWN, EMPTY, COMMON_VERTEX_SET, INNER_RECTANGLE,
                   INCOMPATIBLE)
from .serialization import serialize, parse, to_json, from_json, ParseError
from .invariants import (euler_characteristic, orientability, component_count,
                         boundary_component_count, summary)

__all__ = [
    "Rect", "SurfaceDiagram", "LinkDiagram", "ValidityReport", "GridError",
    "classify_intersection", "validate", "boundary", "canonicalize",
    "canonical", "compact", "same_up_to_rescaling", "diagram",
    "UP", "DOWN", "EMPTY", "COMMON_VERTEX_SET", "INNER_RECTANGLE",
    "INCOMPATIBLE", "serialize", "parse", "to_json", "from_json", "ParseError",
    "euler_characteristic", "orientability", "component_count",
    "boundary_component_count", "summary",
]
