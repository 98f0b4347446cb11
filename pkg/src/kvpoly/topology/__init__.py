"""Combinatorics of diagrams: faces, circuits, codes, surgery and moves."""

from .canonical import canonical_code, canonical_form
from .codec import load, parse, serialize
from .generate import one_crossing_family, random_diagram
from .moves import apply_move
from .structure import circuits, components, crossing_sign, faces, linking_number, twist_number, writhe

__all__ = [
    "apply_move",
    "canonical_code",
    "canonical_form",
    "circuits",
    "components",
    "crossing_sign",
    "faces",
    "linking_number",
    "load",
    "one_crossing_family",
    "parse",
    "random_diagram",
    "serialize",
    "twist_number",
    "writhe",
]
