"""The isotopy moves I-V on diagrams."""

from __future__ import annotations

import logging

from ..errors import SiteMismatch
from ..models.diagram import Diagram, NodeKind, dart, node_of, slot_of
from ..models.move import MoveKind, MoveSpec
from .structure import face_index
from .surgery import new_dart, splice
from .triangles import flip_triangle, read_bigon, read_triangle

logger = logging.getLogger(__name__)


def _require(value: int | None, move: MoveSpec, what: str) -> int:
    if value is None:
        raise SiteMismatch(move.kind.value, f"missing {what}")
    return value


def curl_sign(d: Diagram, node: int) -> int | None:
    """Sign of the curl at ``node``, or None if no two adjacent slots are joined."""
    if not d.is_crossing(node):
        return None
    for k in range(4):
        if d.pairing[dart(node, k)] == dart(node, k + 1):
            return 1 if k % 2 else -1
    return None


def _curl_insert(d: Diagram, move: MoveSpec) -> Diagram:
    # the loop joins slots k, k+1: odd k gives a positive curl
    k = 1 if move.sign > 0 else 0
    loop = (new_dart(d, 0, k), new_dart(d, 0, k + 1))
    first, second = new_dart(d, 0, k + 2), new_dart(d, 0, k + 3)
    if move.dart is None:
        if d.free_circles < 1:
            raise SiteMismatch(move.kind.value, "no free circle to kink")
        links = [loop, (first, second)]
        return splice(d, (), (NodeKind.CROSSING,), links, circle_delta=-1)
    h = move.dart
    if not 0 <= h < d.n_darts:
        raise SiteMismatch(move.kind.value, f"dart {h} out of range")
    ends = (h, d.pairing[h]) if move.side == "left" else (d.pairing[h], h)
    links = [loop, (first, ends[0]), (second, ends[1])]
    return splice(d, (), (NodeKind.CROSSING,), links, cut=(h,))


def _curl_remove(d: Diagram, move: MoveSpec) -> Diagram:
    n = _require(move.node, move, "node")
    if not 0 <= n < d.n_nodes or curl_sign(d, n) is None:
        raise SiteMismatch(move.kind.value, f"node {n} is not a curl")
    k = next(k for k in range(4) if d.pairing[dart(n, k)] == dart(n, k + 1))
    return splice(d, (n,), (), [(dart(n, k + 2), dart(n, k + 3))])


def _r2_insert(d: Diagram, move: MoveSpec) -> Diagram:
    h1 = _require(move.dart, move, "dart")
    h2 = _require(move.dart2, move, "dart2")
    if not (0 <= h1 < d.n_darts and 0 <= h2 < d.n_darts):
        raise SiteMismatch(move.kind.value, "dart out of range")
    if h2 in (h1, d.pairing[h1]):
        raise SiteMismatch(move.kind.value, "both darts lie on the same edge")
    fidx = face_index(d)
    if fidx[h1] != fidx[h2]:
        raise SiteMismatch(move.kind.value, "darts do not share a face")
    # left crossing [h1, tip, right, far end of h2], right crossing [left, tip, far end of h1, h2],
    # read from slot 0 when the strand of h1 is under; rotated one slot when it is over
    off = 1 if move.over else 0

    def left(r: int) -> int:
        return new_dart(d, 0, r + off)

    def right(r: int) -> int:
        return new_dart(d, 1, r + off)

    links = [
        (left(0), h1),
        (left(1), right(1)),
        (left(2), right(0)),
        (left(3), d.pairing[h2]),
        (right(2), d.pairing[h1]),
        (right(3), h2),
    ]
    return splice(d, (), (NodeKind.CROSSING, NodeKind.CROSSING), links, cut=(h1, h2))


def _r2_remove(d: Diagram, move: MoveSpec) -> Diagram:
    h = _require(move.dart, move, "dart")
    bigon = read_bigon(d, h, move.kind.value)
    if not (d.is_crossing(bigon.p) and d.is_crossing(bigon.q)):
        raise SiteMismatch(move.kind.value, "bigon nodes must both be crossings")
    if (bigon.i - bigon.j) % 2 == 0:
        raise SiteMismatch(move.kind.value, "strands alternate over and under around the bigon")
    p, i, q, j = bigon.p, bigon.i, bigon.q, bigon.j
    links = [(dart(p, i + 2), dart(q, j + 3)), (dart(p, i + 3), dart(q, j + 2))]
    return splice(d, (p, q), (), links)


def _r3_slide(d: Diagram, move: MoveSpec) -> Diagram:
    tri = read_triangle(d, _require(move.dart, move, "dart"), move.kind.value)
    if not all(d.is_crossing(n) for n in tri.nodes):
        raise SiteMismatch(move.kind.value, "triangle must consist of three crossings")
    flags = tri.over_flags(d)
    if flags[0] == flags[1] == flags[2]:
        raise SiteMismatch(move.kind.value, "each strand is over exactly once; the triangle is cyclic")
    return flip_triangle(d, tri)


def _vertex_slide(d: Diagram, move: MoveSpec) -> Diagram:
    tri = read_triangle(d, _require(move.dart, move, "dart"), move.kind.value)
    vertices = [k for k, n in enumerate(tri.nodes) if not d.is_crossing(n)]
    if len(vertices) != 1:
        raise SiteMismatch(move.kind.value, "triangle must have exactly one rigid vertex")
    o = tri.over_flags(d)
    # over-ness of the strand avoiding the vertex at its two crossings
    first, second = {0: (o[1], not o[2]), 1: (not o[0], o[2]), 2: (o[0], not o[1])}[vertices[0]]
    if first != second:
        raise SiteMismatch(move.kind.value, "the sliding strand is over at one crossing and under at the other")
    return flip_triangle(d, tri)


def _twist_pattern(d: Diagram, w: int, k: int) -> tuple[int, int, int, int] | None:
    """Crossings (c1, slot, c2, slot) of an existing half twist at corner k of vertex w."""
    a, b = d.pairing[dart(w, k)], d.pairing[dart(w, k + 1)]
    c, e = d.pairing[dart(w, k + 2)], d.pairing[dart(w, k + 3)]
    c1, c2 = node_of(a), node_of(c)
    if c1 == w or c2 == w or c1 == c2 or not (d.is_crossing(c1) and d.is_crossing(c2)):
        return None
    if b != dart(c1, slot_of(a) - 1) or e != dart(c2, slot_of(c) - 1):
        return None
    if slot_of(a) % 2 == slot_of(c) % 2:
        return None
    return c1, slot_of(a), c2, slot_of(c)


def twist_sign(d: Diagram, w: int, k: int) -> int | None:
    """Sign of the half twist sitting at corner k of vertex w, if any."""
    found = _twist_pattern(d, w, k)
    if found is None:
        return None
    return 1 if found[1] % 2 == 0 else -1


def _vertex_twist(d: Diagram, move: MoveSpec) -> Diagram:
    w = _require(move.node, move, "node")
    if not 0 <= w < d.n_nodes or d.is_crossing(w):
        raise SiteMismatch(move.kind.value, f"node {w} is not a rigid vertex")
    k = move.corner
    existing = _twist_pattern(d, w, k)
    if existing is not None and twist_sign(d, w, k) == -move.sign:
        c1, s1, c2, s2 = existing
        ends = (dart(c1, s1 + 1), dart(c1, s1 + 2), dart(c2, s2 + 1), dart(c2, s2 + 2))
        links = [(new_dart(d, 0, r), ends[r]) for r in range(4)]
        logger.debug(f"untwisting vertex {w} at corner {k}")
        return splice(d, (w, c1, c2), (NodeKind.VERTEX,), links)

    ports = [dart(w, k + r) for r in range(4)]

    def vertex(r: int) -> int:
        return new_dart(d, 0, r)

    def c1(r: int) -> int:
        return new_dart(d, 1, r)

    def c2(r: int) -> int:
        return new_dart(d, 2, r)

    if move.sign > 0:
        links = [
            (c1(0), vertex(0)), (c1(1), ports[0]), (c1(2), ports[1]), (c1(3), vertex(1)),
            (c2(0), ports[2]), (c2(1), ports[3]), (c2(2), vertex(3)), (c2(3), vertex(2)),
        ]  # fmt: skip
    else:
        links = [
            (c1(0), ports[0]), (c1(1), ports[1]), (c1(2), vertex(1)), (c1(3), vertex(0)),
            (c2(0), vertex(2)), (c2(1), ports[2]), (c2(2), ports[3]), (c2(3), vertex(3)),
        ]  # fmt: skip
    kinds = (NodeKind.VERTEX, NodeKind.CROSSING, NodeKind.CROSSING)
    return splice(d, (w,), kinds, links)


_HANDLERS = {
    MoveKind.CURL_INSERT: _curl_insert,
    MoveKind.CURL_REMOVE: _curl_remove,
    MoveKind.R2_INSERT: _r2_insert,
    MoveKind.R2_REMOVE: _r2_remove,
    MoveKind.R3_SLIDE: _r3_slide,
    MoveKind.VERTEX_SLIDE: _vertex_slide,
    MoveKind.VERTEX_TWIST: _vertex_twist,
}


def apply_move(d: Diagram, move: MoveSpec) -> Diagram:
    """Apply an isotopy move.

    Moves inserting nodes append them after the surviving nodes, in the order
    (left, right) for r2_insert and (vertex, first crossing, second crossing)
    for vertex_twist.

    Raises:
        SiteMismatch: if the site does not have the shape the move needs
    """
    result = _HANDLERS[move.kind](d, move)
    logger.debug(f"{move.kind.value}: {d.n_nodes} -> {result.n_nodes} nodes")
    return result
