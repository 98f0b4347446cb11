"""Reading and writing the line-oriented .kvg diagram format.

    V a b c d   rigid vertex, edge labels on slots 0..3 counterclockwise
    X a b c d   crossing, under-strand on slots 0 and 2
    O n         n free circles (at most one such line)
    # ...       comment
"""

from __future__ import annotations

import logging
from pathlib import Path

from ..errors import DiagramSyntaxError, LabelError
from ..models.diagram import Diagram, NodeKind
from .canonical import canonical_form
from .structure import validate_genus

logger = logging.getLogger(__name__)


def _positive_int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise DiagramSyntaxError(f"expected an integer, got {token!r}", line) from None
    if value <= 0:
        raise DiagramSyntaxError(f"edge labels must be positive, got {value}", line)
    return value


def parse(text: str) -> Diagram:
    """Parse .kvg text into a validated diagram.

    Raises:
        DiagramSyntaxError: on a malformed line
        LabelError: when an edge label is not used exactly twice
        GenusError: when the rotation system is not planar
    """
    kinds: list[NodeKind] = []
    node_lines: list[int] = []
    occurrences: dict[int, list[tuple[int, int]]] = {}
    circles: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        head, args = tokens[0], tokens[1:]
        if head in ("V", "X"):
            if len(args) != 4:
                raise DiagramSyntaxError(f"{head} needs 4 edge labels, got {len(args)}", lineno)
            node = len(kinds)
            kinds.append(NodeKind(head))
            node_lines.append(lineno)
            for slot, token in enumerate(args):
                occurrences.setdefault(_positive_int(token, lineno), []).append((4 * node + slot, lineno))
        elif head == "O":
            if circles is not None:
                raise DiagramSyntaxError("at most one O line is allowed", lineno)
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramSyntaxError("O needs one nonnegative integer", lineno)
            circles = int(args[0])
        else:
            raise DiagramSyntaxError(f"unknown record type {head!r}", lineno)

    pairing = [0] * (4 * len(kinds))
    for label, uses in occurrences.items():
        if len(uses) != 2:
            raise LabelError(label, len(uses), uses[-1][1])
        (h, _), (p, _) = uses
        pairing[h], pairing[p] = p, h

    diagram = Diagram(kinds=tuple(kinds), pairing=tuple(pairing), free_circles=circles or 0)
    validate_genus(diagram, node_lines)
    logger.debug(f"parsed diagram with {diagram.n_nodes} nodes and {diagram.free_circles} free circles")
    return diagram


def load(path: str | Path) -> Diagram:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DiagramSyntaxError("file is not valid UTF-8", raw.count(b"\n", 0, e.start) + 1) from e
    return parse(text)


def serialize(d: Diagram) -> str:
    """Canonical .kvg text: nodes in canonical order, edges numbered by first appearance.

    A component read clockwise is written turned over: reflected, with its crossings switched.
    """
    _, order = canonical_form(d)
    labels: dict[int, int] = {}
    lines = []
    for n, start, direction in order:
        # the written under-strand must land on slots 0 and 2
        if d.kinds[n] is NodeKind.CROSSING and start % 2 != (0 if direction == 1 else 1):
            start += 1
        row = []
        for j in range(4):
            h = 4 * n + (start + direction * j) % 4
            edge = min(h, d.pairing[h])
            if edge not in labels:
                labels[edge] = len(labels) + 1
            row.append(str(labels[edge]))
        lines.append(f"{d.kinds[n].value} {' '.join(row)}")
    if d.free_circles:
        lines.append(f"O {d.free_circles}")
    return "\n".join(lines) + "\n"
