"""Seeded random diagrams for the test corpus."""

from __future__ import annotations

import logging
import random

from ..errors import SiteMismatch
from ..models.diagram import Diagram, NodeKind
from ..models.move import MoveKind, MoveSpec
from .moves import apply_move, curl_sign
from .structure import components, faces
from .surgery import smooth

logger = logging.getLogger(__name__)


def _random_r2(d: Diagram, rng: random.Random) -> Diagram | None:
    candidates = [f for f in faces(d) if len({min(h, d.pairing[h]) for h in f}) >= 2]
    if not candidates:
        return None
    face = rng.choice(candidates)
    h1 = rng.choice(face)
    others = [h for h in face if h not in (h1, d.pairing[h1])]
    if not others:
        return None
    return apply_move(d, MoveSpec.r2_insert(h1, rng.choice(others), over=rng.random() < 0.5))


def _random_r3(d: Diagram, rng: random.Random) -> Diagram:
    triangles = [f for f in faces(d) if len(f) == 3]
    rng.shuffle(triangles)
    for face in triangles:
        try:
            return apply_move(d, MoveSpec.r3_slide(face[0]))
        except SiteMismatch:
            continue
    return d


def random_diagram(n_vertices: int, n_crossings: int, seed: int) -> Diagram:
    """A valid diagram with exactly the requested numbers of vertices and crossings.

    Starts from one or two free circles, grows the first one with random curls
    and second Reidemeister moves, mixes with third moves, then turns randomly
    chosen crossings into rigid vertices. The same seed gives the same diagram.
    """
    if n_vertices < 0 or n_crossings < 0:
        raise ValueError("node counts must be nonnegative")
    rng = random.Random(seed)
    d = Diagram.circles(1 + rng.randrange(2))
    total = n_vertices + n_crossings
    if total == 0:
        return d
    d = apply_move(d, MoveSpec.curl_insert(None, rng.choice((1, -1))))
    while d.n_nodes < total:
        grown: Diagram | None = None
        if total - d.n_nodes >= 2 and rng.random() < 0.7:
            grown = _random_r2(d, rng)
        if grown is None:
            h = rng.randrange(d.n_darts)
            grown = apply_move(d, MoveSpec.curl_insert(h, rng.choice((1, -1)), rng.choice(("left", "right"))))
        d = grown
        if rng.random() < 0.3:
            d = _random_r3(d, rng)
    kinds = list(d.kinds)
    for n in rng.sample(range(total), n_vertices):
        kinds[n] = NodeKind.VERTEX
    result = Diagram.build(tuple(kinds), d.pairing, d.free_circles)
    logger.debug(f"random diagram seed={seed}: {n_vertices} vertices, {n_crossings} crossings")
    return result


def preserves_components(d: Diagram, node: int) -> bool:
    """Whether both smoothings and the vertex at ``node`` leave the component count unchanged."""
    vertex = d.with_kind(node, NodeKind.VERTEX)
    count = components(vertex)
    return components(smooth(d, node, True)) == count == components(smooth(d, node, False))


def one_crossing_family(seed: int, count: int, max_vertices: int = 5) -> list[Diagram]:
    """One-crossing diagrams whose crossing can be resolved without changing the component count.

    Each is a random crossing-free graph with one vertex made into a crossing.
    """
    rng = random.Random(seed)
    found: list[Diagram] = []
    attempts = 0
    while len(found) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError(f"could not generate {count} one-crossing diagrams from seed {seed}")
        planar = random_diagram(rng.randint(2, max_vertices), 0, rng.randrange(2**31))
        if planar.free_circles:
            planar = planar.with_free_circles(0)
        node = rng.randrange(planar.n_nodes)
        candidate = planar.with_kind(node, NodeKind.CROSSING)
        if preserves_components(candidate, node):
            found.append(candidate)
    return found


def _move_candidates(d: Diagram, kind: MoveKind, rng: random.Random) -> list[MoveSpec]:
    all_faces = faces(d)
    if kind is MoveKind.CURL_INSERT:
        sites: list[int | None] = list(range(d.n_darts)) + ([None] if d.free_circles else [])
        return [MoveSpec.curl_insert(h, rng.choice((1, -1)), rng.choice(("left", "right"))) for h in sites]
    if kind is MoveKind.CURL_REMOVE:
        return [MoveSpec.curl_remove(n) for n in d.crossings() if curl_sign(d, n) is not None]
    if kind is MoveKind.R2_INSERT:
        return [
            MoveSpec.r2_insert(h1, h2, rng.random() < 0.5)
            for face in all_faces
            for h1 in face
            for h2 in face
            if h2 not in (h1, d.pairing[h1])
        ]
    if kind is MoveKind.R2_REMOVE:
        return [MoveSpec.r2_remove(f[0]) for f in all_faces if len(f) == 2]
    if kind is MoveKind.R3_SLIDE:
        return [MoveSpec.r3_slide(f[0]) for f in all_faces if len(f) == 3]
    if kind is MoveKind.VERTEX_SLIDE:
        return [MoveSpec.vertex_slide(h) for f in all_faces if len(f) == 3 for h in f]
    nodes = [n for n in range(d.n_nodes) if not d.is_crossing(n)]
    return [MoveSpec.vertex_twist(n, k, s) for n in nodes for k in range(4) for s in (1, -1)]


def random_move(
    d: Diagram, rng: random.Random, kinds: list[MoveKind] | None = None
) -> tuple[MoveSpec, Diagram] | None:
    """A randomly chosen move that applies to ``d``, with its result."""
    order = list(kinds or MoveKind)
    rng.shuffle(order)
    for kind in order:
        candidates = _move_candidates(d, kind, rng)
        rng.shuffle(candidates)
        for move in candidates:
            try:
                return move, apply_move(d, move)
            except SiteMismatch:
                continue
    return None


def framing_change(d: Diagram, move: MoveSpec) -> int:
    """How the twisting number changes under ``move``: the sign of an added or removed curl, else 0."""
    if move.kind is MoveKind.CURL_INSERT:
        return move.sign
    if move.kind is MoveKind.CURL_REMOVE and move.node is not None:
        return -(curl_sign(d, move.node) or 0)
    return 0
