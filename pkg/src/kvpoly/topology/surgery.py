"""Local rewiring of diagrams.

Every local rewrite in the package (smoothings, identities, moves) is a splice:
remove some nodes, add some new ones and say how the loose ends connect.

Darts are addressed in an extended numbering: old darts keep their index, and
slot ``s`` of new node ``k`` is ``4 * (old node count + k) + s``. The darts of
removed nodes act as pass-through points: each keeps its old edge and may get
one link, so a chain old end -> removed dart -> link -> removed dart -> old end
becomes a single edge of the result.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..models.diagram import Diagram, NodeKind


def new_dart(d: Diagram, k: int, slot: int) -> int:
    """Extended index of slot ``slot`` of the ``k``-th added node."""
    return 4 * (d.n_nodes + k) + slot % 4


def splice(
    d: Diagram,
    removed: Iterable[int],
    new_kinds: Sequence[NodeKind],
    links: Iterable[tuple[int, int]],
    cut: Iterable[int] = (),
    circle_delta: int = 0,
) -> Diagram:
    """Rewire ``d``.

    Args:
        removed: nodes to delete
        new_kinds: kinds of the nodes to add
        links: pairs of extended darts to connect
        cut: old darts whose current edge is dropped (both ends)
        circle_delta: change to the free circle count, on top of closed loops
            formed entirely by removed darts

    Returns:
        The rewired diagram. Surviving nodes keep their relative order and the
        added nodes follow them in the order given.
    """
    removed_set = set(removed)
    cut_set = set(cut)
    cut_set |= {d.pairing[h] for h in cut_set}
    n_old = d.n_nodes
    total = 4 * (n_old + len(new_kinds))

    edges: list[tuple[int, int]] = []
    for h, p in enumerate(d.pairing):
        if h < p and h not in cut_set:
            edges.append((h, p))
    edges.extend(links)
    adjacency: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        adjacency.setdefault(u, []).append(i)
        adjacency.setdefault(v, []).append(i)

    def is_pass_through(h: int) -> bool:
        return h < 4 * n_old and h // 4 in removed_set

    endpoints = [h for h in range(total) if not is_pass_through(h)]
    for h in endpoints:
        if len(adjacency.get(h, ())) != 1:
            raise ValueError(f"dart {h} has {len(adjacency.get(h, ()))} connections after splice, expected 1")

    def other(edge: int, h: int) -> int:
        u, v = edges[edge]
        return v if u == h else u

    new_pairing: dict[int, int] = {}
    edge_used = [False] * len(edges)
    for start in endpoints:
        if start in new_pairing:
            continue
        edge = adjacency[start][0]
        h = start
        while True:
            edge_used[edge] = True
            h = other(edge, h)
            if not is_pass_through(h):
                break
            onward = [e for e in adjacency[h] if e != edge]
            if not onward:
                raise ValueError(f"removed dart {h} is a dead end on a surviving path")
            edge = onward[0]
        new_pairing[start] = h
        new_pairing[h] = start

    loops = 0
    for i in range(len(edges)):
        if edge_used[i]:
            continue
        # walk the component of unused edges among removed darts
        stack = [i]
        degree_ok = True
        while stack:
            e = stack.pop()
            if edge_used[e]:
                continue
            edge_used[e] = True
            for h in edges[e]:
                incident = adjacency[h]
                if len(incident) != 2:
                    degree_ok = False
                stack.extend(x for x in incident if not edge_used[x])
        if degree_ok:
            loops += 1

    survivors = [n for n in range(n_old) if n not in removed_set]
    renumber = {old: new for new, old in enumerate(survivors)}
    for k in range(len(new_kinds)):
        renumber[n_old + k] = len(survivors) + k

    def remap(h: int) -> int:
        return 4 * renumber[h // 4] + h % 4

    kinds = tuple(d.kinds[n] for n in survivors) + tuple(new_kinds)
    pairing = [0] * (4 * len(kinds))
    for h, p in new_pairing.items():
        pairing[remap(h)] = remap(p)
    circles = d.free_circles + loops + circle_delta
    if circles < 0:
        raise ValueError("splice removed more free circles than the diagram has")
    return Diagram.build(kinds, tuple(pairing), circles)


def smooth(d: Diagram, node: int, a_type: bool, parity: int = 0) -> Diagram:
    """Replace ``node`` by one of its two smoothings.

    With the under-strand on slots ``parity`` and ``parity + 2``, the A-smoothing
    joins slots (p+1, p+2) and (p+3, p); the B-smoothing joins (p, p+1) and (p+2, p+3).
    """
    p = parity
    pairs = ((p + 1, p + 2), (p + 3, p)) if a_type else ((p, p + 1), (p + 2, p + 3))
    links = [(4 * node + x % 4, 4 * node + y % 4) for x, y in pairs]
    return splice(d, {node}, (), links)
