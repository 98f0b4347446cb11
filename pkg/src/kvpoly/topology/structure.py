"""Structural queries: faces, components, straight-ahead circuits, writhe."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

import networkx as nx

from ..errors import GenusError
from ..models.diagram import Diagram, NodeKind, dart, node_of, slot_of

logger = logging.getLogger(__name__)

Step = tuple[int, int]
"""A circuit step: (node, entry slot)."""


def face_successor(d: Diagram, h: int) -> int:
    """Next dart along a face: cross the edge, then turn to the next slot clockwise."""
    p = d.pairing[h]
    return dart(node_of(p), slot_of(p) - 1)


@lru_cache(maxsize=4096)
def faces(d: Diagram) -> tuple[tuple[int, ...], ...]:
    """Boundary walks of all faces.

    A dart ``(n, s)`` on a face means the face occupies the corner between slots
    ``s`` and ``s+1`` of node ``n``. Every dart lies on exactly one face.
    """
    seen = [False] * d.n_darts
    result: list[tuple[int, ...]] = []
    for start in range(d.n_darts):
        if seen[start]:
            continue
        walk = []
        h = start
        while not seen[h]:
            seen[h] = True
            walk.append(h)
            h = face_successor(d, h)
        result.append(tuple(walk))
    return tuple(result)


@lru_cache(maxsize=4096)
def face_index(d: Diagram) -> tuple[int, ...]:
    """Map each dart to the index of its face in :func:`faces`."""
    index = [0] * d.n_darts
    for i, walk in enumerate(faces(d)):
        for h in walk:
            index[h] = i
    return tuple(index)


def node_graph(d: Diagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(d.n_nodes))
    for h, p in enumerate(d.pairing):
        if h < p:
            graph.add_edge(node_of(h), node_of(p))
    return graph


def node_components(d: Diagram) -> list[list[int]]:
    """Connected components of the underlying 4-valent map, as sorted node lists."""
    return sorted(sorted(c) for c in nx.connected_components(node_graph(d)))


def validate_genus(d: Diagram, lines: Sequence[int] | None = None) -> None:
    """Raise GenusError unless every component satisfies V - E + F = 2.

    ``lines`` gives the source line of each node; the error cites the first line
    of the offending component.
    """
    fidx = face_index(d)
    for i, comp in enumerate(node_components(d)):
        comp_faces = {fidx[dart(n, s)] for n in comp for s in range(4)}
        euler = len(comp) - 2 * len(comp) + len(comp_faces)
        if euler != 2:
            raise GenusError(i, euler, lines[comp[0]] if lines is not None else None)


def _strand_key(d: Diagram, h: int) -> int:
    n = node_of(h)
    return 2 * n + (slot_of(h) % 2 if d.kinds[n] is NodeKind.CROSSING else 0)


def components(d: Diagram) -> int:
    """Connected components of the spatial graph, free circles included.

    A crossing is not a point of the graph: its two strands are separate pieces.
    """
    graph = nx.Graph()
    for h, p in enumerate(d.pairing):
        graph.add_edge(_strand_key(d, h), _strand_key(d, p))
    return nx.number_connected_components(graph) + d.free_circles


@lru_cache(maxsize=4096)
def circuits(d: Diagram) -> tuple[tuple[Step, ...], ...]:
    """Straight-ahead closed walks, one per link component; free circles are empty walks.

    Each walk is the list of (node, entry slot) steps taken when leaving from the
    lowest unused dart. Every dart is used exactly once, as an exit or an entry.
    """
    used = [False] * d.n_darts
    walks: list[tuple[Step, ...]] = []
    for start in range(d.n_darts):
        if used[start]:
            continue
        steps: list[Step] = []
        exit_dart = start
        while True:
            used[exit_dart] = True
            entry = d.pairing[exit_dart]
            used[entry] = True
            n, t = node_of(entry), slot_of(entry)
            steps.append((n, t))
            exit_dart = dart(n, t + 2)
            if exit_dart == start:
                break
        walks.append(tuple(steps))
    walks.extend(() for _ in range(d.free_circles))
    return tuple(walks)


def crossing_sign(under_entry: int, over_entry: int) -> int:
    """+1 iff the over direction is the under direction turned one slot counterclockwise."""
    return 1 if over_entry % 4 == (under_entry + 1) % 4 else -1


def _crossing_visits(d: Diagram, walk: tuple[Step, ...]) -> dict[int, list[int]]:
    visits: dict[int, list[int]] = {}
    for n, t in walk:
        if d.kinds[n] is NodeKind.CROSSING:
            visits.setdefault(n, []).append(t)
    return visits


def writhe(d: Diagram, walk: tuple[Step, ...]) -> int:
    """Signed count of the self-crossings of one circuit."""
    total = 0
    for entries in _crossing_visits(d, walk).values():
        if len(entries) == 2:
            under = next(t for t in entries if t % 2 == 0)
            over = next(t for t in entries if t % 2 == 1)
            total += crossing_sign(under, over)
    return total


def twist_number(d: Diagram) -> int:
    """Sum of the writhes of all circuits."""
    return sum(writhe(d, walk) for walk in circuits(d))


def linking_number(d: Diagram, first: tuple[Step, ...], second: tuple[Step, ...]) -> Fraction:
    """Half the signed count of crossings between two distinct circuits."""
    a, b = _crossing_visits(d, first), _crossing_visits(d, second)
    total = 0
    for n in a.keys() & b.keys():
        entries = a[n] + b[n]
        under = next(t for t in entries if t % 2 == 0)
        over = next(t for t in entries if t % 2 == 1)
        total += crossing_sign(under, over)
    return Fraction(total, 2)
