"""Relabeling-invariant codes for diagrams."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from ..models.diagram import Diagram, NodeKind, dart, node_of, slot_of
from .structure import node_components

NodeCode = tuple[int, int, int, int, int, int, int, int, int]
ComponentCode = tuple[NodeCode, ...]
Reading = tuple[int, int, int]
"""(node, start slot, direction): direction 1 reads slots counterclockwise, -1 clockwise."""


def _kind_code(d: Diagram, node: int, start: int, direction: int) -> int:
    if d.kinds[node] is NodeKind.VERTEX:
        return 0
    # a clockwise reading describes the reflected diagram with every crossing switched
    under = start if direction == 1 else start + 1
    return 1 + under % 2


def _bfs(d: Diagram, root: int, root_slot: int, direction: int) -> tuple[ComponentCode, list[Reading]]:
    label = {root: 0}
    start = {root: root_slot}
    order = [root]
    queue = deque([root])
    rows: list[NodeCode] = []
    while queue:
        n = queue.popleft()
        s0 = start[n]
        row = [_kind_code(d, n, s0, direction)]
        for j in range(4):
            p = d.pairing[dart(n, s0 + direction * j)]
            m, t = node_of(p), slot_of(p)
            if m not in label:
                label[m] = len(label)
                start[m] = t
                order.append(m)
                queue.append(m)
            row.extend((label[m], (direction * (t - start[m])) % 4))
        rows.append(tuple(row))  # type: ignore[arg-type]
    return tuple(rows), [(n, start[n], direction) for n in order]


def _component_form(d: Diagram, nodes: list[int]) -> tuple[ComponentCode, list[Reading]]:
    readings = (_bfs(d, n, s, direction) for n in nodes for s in range(4) for direction in (1, -1))
    return min(readings, key=lambda item: item[0])


@lru_cache(maxsize=65536)
def canonical_form(d: Diagram) -> tuple[tuple[ComponentCode, ...], tuple[Reading, ...]]:
    """Component codes in sorted order plus the readings they induce.

    Each component is read breadth-first from every (node, slot) root in both
    orientations and the lexicographically least reading wins. A clockwise
    reading is the reflected component with all of its crossings switched, which
    is the same spatial graph turned over in space, so the twisting number and
    the value agree. Mirror images (reflection alone) keep distinct codes.
    """
    forms = sorted(_component_form(d, comp) for comp in node_components(d))
    codes = tuple(code for code, _ in forms)
    order = tuple(entry for _, reading in forms for entry in reading)
    return codes, order


def canonical_code(d: Diagram) -> bytes:
    """Byte string equal for two diagrams iff they agree up to relabeling, re-rooting and turning over."""
    codes, _ = canonical_form(d)
    parts = [";".join(",".join(map(str, row)) for row in comp) for comp in codes]
    return ("|".join(parts) + f"#O{d.free_circles}").encode("ascii")
