"""Reading bigon and triangle faces, and flipping triangles."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SiteMismatch
from ..models.diagram import Diagram, NodeKind, dart, node_of, slot_of
from .structure import face_successor
from .surgery import new_dart, splice


@dataclass(frozen=True)
class Bigon:
    """A 2-gon face between distinct nodes ``p`` and ``q``.

    Legs 1..4 run counterclockwise around the pair: slots i+2, i+3 of ``p``
    then slots j+2, j+3 of ``q``.
    """

    p: int
    i: int
    q: int
    j: int

    @property
    def nodes(self) -> tuple[int, int]:
        return (self.p, self.q)

    @property
    def legs(self) -> tuple[int, int, int, int]:
        return (
            dart(self.p, self.i + 2),
            dart(self.p, self.i + 3),
            dart(self.q, self.j + 2),
            dart(self.q, self.j + 3),
        )


@dataclass(frozen=True)
class Triangle:
    """A 3-gon face on three distinct nodes, listed counterclockwise.

    ``slots[k]`` is the face dart slot at ``nodes[k]``. Legs 1..6 run
    counterclockwise: slots s+2, s+3 of each node in turn. The strands through
    the triangle join legs {1,4}, {2,5} and {3,6}.
    """

    nodes: tuple[int, int, int]
    slots: tuple[int, int, int]

    @property
    def legs(self) -> tuple[int, ...]:
        return tuple(dart(n, s + k) for n, s in zip(self.nodes, self.slots, strict=True) for k in (2, 3))

    def over_flags(self, d: Diagram) -> tuple[bool, bool, bool]:
        """For each node, whether the strand of its first leg is the over-strand."""
        flags = [d.is_crossing(n) and s % 2 == 1 for n, s in zip(self.nodes, self.slots, strict=True)]
        return (flags[0], flags[1], flags[2])


def face_walk(d: Diagram, h: int) -> list[int]:
    walk = [h]
    nxt = face_successor(d, h)
    while nxt != h:
        walk.append(nxt)
        nxt = face_successor(d, nxt)
    return walk


def read_bigon(d: Diagram, h: int, move: str = "bigon") -> Bigon:
    walk = face_walk(d, h)
    if len(walk) != 2:
        raise SiteMismatch(move, f"dart {h} lies on a face of size {len(walk)}, not a bigon")
    (p, i), (q, j) = ((node_of(x), slot_of(x)) for x in walk)
    if p == q:
        raise SiteMismatch(move, "bigon face bounded by a single node")
    return Bigon(p, i, q, j)


def read_triangle(d: Diagram, h: int, move: str = "triangle") -> Triangle:
    walk = face_walk(d, h)
    if len(walk) != 3:
        raise SiteMismatch(move, f"dart {h} lies on a face of size {len(walk)}, not a triangle")
    nodes = tuple(node_of(x) for x in walk)
    if len(set(nodes)) != 3:
        raise SiteMismatch(move, "triangle face does not have three distinct nodes")
    slots = tuple(slot_of(x) for x in walk)
    return Triangle(nodes=(nodes[0], nodes[1], nodes[2]), slots=(slots[0], slots[1], slots[2]))


# Flipped triangle: (source node in the old triangle, first leg, second leg), legs 1-based.
_FLIP_LAYOUT = ((2, 2, 3), (0, 4, 5), (1, 6, 1))


def flip_triangle(d: Diagram, tri: Triangle) -> Diagram:
    """Exchange the triangle for the one on the other side of its three strands.

    Each new node inherits kind and over-strand from the old node where the same
    two strands met, so for crossings this is the third Reidemeister move and for
    vertices it is the planar flip of the calculus.
    """
    legs = tri.legs
    flags = tri.over_flags(d)
    kinds = [d.kinds[tri.nodes[src]] for src, _, _ in _FLIP_LAYOUT]
    links: list[tuple[int, int]] = []

    def slot(k: int, rel: int) -> int:
        src = _FLIP_LAYOUT[k][0]
        shift = 1 if kinds[k] is NodeKind.CROSSING and flags[src] else 0
        return (rel + shift) % 4

    for k, (_, first, second) in enumerate(_FLIP_LAYOUT):
        links.append((legs[first - 1], new_dart(d, k, slot(k, 0))))
        links.append((legs[second - 1], new_dart(d, k, slot(k, 1))))
        nxt = (k + 1) % 3
        links.append((new_dart(d, k, slot(k, 2)), new_dart(d, nxt, slot(nxt, 3))))
    return splice(d, tri.nodes, kinds, links)
