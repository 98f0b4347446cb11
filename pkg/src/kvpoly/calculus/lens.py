"""Planning triangle flips that expose a monogon or bigon.

A lens is the region cut out by two straight-ahead arcs that leave a vertex u
from adjacent slots and first meet again at a vertex w, arriving there on
different strands, with the region filling a single corner at w. While no
monogon or bigon is present, the constructive planner works greedily: it picks
a lens with the fewest faces and flips the first triangle face inside it whose
flip either exposes a monogon or bigon or shrinks the smallest lens. It does
not replay a full nested chain of triangles. When no such flip exists, a
bounded breadth-first search over triangle flips takes over.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import Literal

from ..errors import ReductionError
from ..models.diagram import Diagram, dart, node_of, slot_of
from ..topology.canonical import canonical_code
from ..topology.structure import face_index, faces
from ..topology.triangles import flip_triangle, read_triangle

logger = logging.getLogger(__name__)

LensStrategy = Literal["constructive", "search"]


@dataclass(frozen=True)
class Lens:
    u: int
    slot: int
    w: int
    boundary: frozenset[int]
    """Darts on the two arcs (both ends of every arc edge)."""
    region: frozenset[int]
    """Face indices inside the lens."""
    arc_nodes: frozenset[int]


def local_reduction_dart(d: Diagram) -> int | None:
    """A dart of a monogon face or of a bigon between distinct nodes, if there is one."""
    for walk in faces(d):
        if len(walk) == 1:
            return walk[0]
    for walk in faces(d):
        if len(walk) == 2 and node_of(walk[0]) != node_of(walk[1]):
            return walk[0]
    return None


def _straight_walk(d: Diagram, start: int) -> list[tuple[int, int]]:
    """(node, entry slot) steps leaving through ``start`` until a node would repeat."""
    origin = node_of(start)
    steps: list[tuple[int, int]] = []
    seen = {origin}
    h = start
    while True:
        p = d.pairing[h]
        n, t = node_of(p), slot_of(p)
        steps.append((n, t))
        if n in seen:
            return steps
        seen.add(n)
        h = dart(n, t + 2)


def _lens_from(d: Diagram, u: int, s: int) -> Lens | None:
    walk1 = _straight_walk(d, dart(u, s))
    walk2 = _straight_walk(d, dart(u, s + 1))
    first2 = {}
    for j, (n, _) in enumerate(walk2):
        first2.setdefault(n, j)
    for i, (w, t1) in enumerate(walk1):
        if w == u or w not in first2:
            continue
        j = first2[w]
        prefix1 = {n for n, _ in walk1[:i]}
        prefix2 = {n for n, _ in walk2[:j]}
        if prefix1 & prefix2 or u in prefix1 | prefix2:
            continue
        t2 = walk2[j][1]
        if (t1 - t2) % 2 == 0:
            return None
        boundary: set[int] = set()
        for walk, first_slot, length in ((walk1, s, i), (walk2, s + 1, j)):
            h = dart(u, first_slot)
            for n, t in walk[: length + 1]:
                boundary.update((h, dart(n, t)))
                h = dart(n, t + 2)
        fidx = face_index(d)
        region = {fidx[dart(u, s)]}
        queue = deque(region)
        while queue:
            f = queue.popleft()
            for h in faces(d)[f]:
                if h in boundary:
                    continue
                g = fidx[d.pairing[h]]
                if g not in region:
                    region.add(g)
                    queue.append(g)
        corner = t1 if (t2 - t1) % 4 == 1 else t2
        if fidx[dart(w, corner)] not in region:
            return None
        arc_nodes = {u, w} | prefix1 | prefix2
        return Lens(u, s, w, frozenset(boundary), frozenset(region), frozenset(arc_nodes))
    return None


def find_lenses(d: Diagram) -> list[Lens]:
    lenses = []
    for u in range(d.n_nodes):
        for s in range(4):
            lens = _lens_from(d, u, s)
            if lens is not None:
                lenses.append(lens)
    return lenses


def minimal_lens_size(d: Diagram) -> int | None:
    sizes = [len(lens.region) for lens in find_lenses(d)]
    return min(sizes) if sizes else None


def _is_flippable(d: Diagram, h: int) -> bool:
    walk = faces(d)[face_index(d)[h]]
    return len(walk) == 3 and len({node_of(x) for x in walk}) == 3 and not any(d.is_crossing(node_of(x)) for x in walk)


def _candidate_flips(d: Diagram, lens: Lens) -> list[int]:
    """Triangle face darts inside the lens, most promising first."""
    all_faces = faces(d)
    preferred: list[int] = []
    corners: list[int] = []
    others: list[int] = []
    for f in sorted(lens.region):
        walk = all_faces[f]
        if not _is_flippable(d, walk[0]):
            continue
        nodes = {node_of(x) for x in walk}
        on_boundary = [x for x in walk if x in lens.boundary and d.pairing[x] in lens.boundary]
        interior = nodes - lens.arc_nodes
        if on_boundary and len(interior) == 1:
            preferred.append(walk[0])
        elif lens.u in nodes or lens.w in nodes:
            corners.append(walk[0])
        else:
            others.append(walk[0])
    return preferred + corners + others


def _constructive_plan(d: Diagram, rng: random.Random | None) -> list[int] | None:
    flips: list[int] = []
    current = d
    seen = {canonical_code(current)}
    while local_reduction_dart(current) is None:
        lenses = find_lenses(current)
        if not lenses:
            return None
        best = min(len(lens.region) for lens in lenses)
        minimal = [lens for lens in lenses if len(lens.region) == best]
        lens = rng.choice(minimal) if rng is not None else minimal[0]
        chosen: tuple[int, Diagram] | None = None
        for h in _candidate_flips(current, lens):
            flipped = flip_triangle(current, read_triangle(current, h))
            if canonical_code(flipped) in seen:
                continue
            if local_reduction_dart(flipped) is not None:
                chosen = (h, flipped)
                break
            size = minimal_lens_size(flipped)
            if size is not None and size < best:
                chosen = (h, flipped)
                break
        if chosen is None:
            return None
        flips.append(chosen[0])
        current = chosen[1]
        seen.add(canonical_code(current))
        logger.debug(f"lens plan step {len(flips)}: flipped at dart {chosen[0]}, lens had {best} faces")
    return flips


def search_plan(d: Diagram, max_depth: int) -> list[int] | None:
    """Shortest sequence of vertex-triangle flips reaching a monogon or bigon, up to ``max_depth``."""
    queue: deque[tuple[Diagram, list[int]]] = deque([(d, [])])
    seen = {canonical_code(d)}
    while queue:
        current, path = queue.popleft()
        if local_reduction_dart(current) is not None:
            return path
        if len(path) >= max_depth:
            continue
        for walk in faces(current):
            if not _is_flippable(current, walk[0]):
                continue
            flipped = flip_triangle(current, read_triangle(current, walk[0]))
            code = canonical_code(flipped)
            if code in seen:
                continue
            seen.add(code)
            queue.append((flipped, path + [walk[0]]))
    return None


def plan_flips(
    d: Diagram,
    *,
    rng: random.Random | None = None,
    strategy: LensStrategy = "constructive",
    search_depth: int = 6,
) -> tuple[list[int], int]:
    """Flips leading to a diagram with a monogon or bigon, and a dart of that face.

    Raises:
        ReductionError: if neither planner finds a sequence
    """
    plan = _constructive_plan(d, rng) if strategy == "constructive" else None
    if plan is None:
        if strategy == "constructive":
            logger.warning(f"constructive lens planning failed on a {d.n_nodes}-vertex diagram, searching instead")
        plan = search_plan(d, search_depth)
    if plan is None:
        raise ReductionError(f"no flip sequence of length <= {search_depth} exposes a monogon or bigon")
    final = d
    for h in plan:
        final = flip_triangle(final, read_triangle(final, h))
    target = local_reduction_dart(final)
    assert target is not None
    return plan, target
