"""Data models for kvpoly."""

from .diagram import Diagram, NodeKind, dart, node_of, slot_of
from .move import MoveKind, MoveSpec
from .reduction import Reduction, ReductionKind
from .verdict import PlanarityStatus, Verdict

__all__ = [
    "Diagram",
    "MoveKind",
    "MoveSpec",
    "NodeKind",
    "PlanarityStatus",
    "Reduction",
    "ReductionKind",
    "Verdict",
    "dart",
    "node_of",
    "slot_of",
]
