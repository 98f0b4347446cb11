"""Reference Dubrovnik polynomial of link diagrams, by skein tree to descending diagrams.

The recursion uses z = A - B:

    D(X) = D(X switched) + (A - B) (D(A-smoothing of X) - D(B-smoothing of X))

and a descending diagram, read along a fixed traversal, is an unlink whose value
is a^(total self-writhe) mu^(components - 1).
"""

from __future__ import annotations

import logging
from functools import lru_cache

from ..config import get_settings
from ..errors import DepthExceeded
from ..models.diagram import Diagram, dart, node_of, slot_of
from ..ring import MU, ONE, VAR_A, VAR_B, RingElem
from ..topology.structure import circuits, writhe
from ..topology.surgery import smooth

logger = logging.getLogger(__name__)

Z = VAR_A - VAR_B


def switch_crossing(d: Diagram, node: int) -> Diagram:
    """Exchange over and under at a crossing by turning its slots one step clockwise."""
    if not d.is_crossing(node):
        raise ValueError(f"node {node} is not a crossing")

    def moved(h: int) -> int:
        return dart(node, slot_of(h) - 1) if node_of(h) == node else h

    pairing = [0] * d.n_darts
    for h, p in enumerate(d.pairing):
        pairing[moved(h)] = moved(p)
    return Diagram.build(d.kinds, tuple(pairing), d.free_circles)


def _require_link(d: Diagram) -> None:
    if d.vertex_count():
        raise ValueError(f"a link diagram has no rigid vertices, got {d.vertex_count()}")


def non_descending_crossings(d: Diagram) -> list[int]:
    """Crossings first reached on their under-strand along the traversal order of ``circuits``."""
    seen: set[int] = set()
    bad: list[int] = []
    for walk in circuits(d):
        for n, t in walk:
            if n in seen:
                continue
            seen.add(n)
            if t % 2 == 0:
                bad.append(n)
    return bad


def descending_value(d: Diagram) -> RingElem:
    walks = circuits(d)
    if not walks:
        return ONE
    total_writhe = sum(writhe(d, walk) for walk in walks)
    return RingElem.monomial(1, 0, 0, total_writhe) * MU ** (len(walks) - 1)


@lru_cache(maxsize=65536)
def link_value(d: Diagram) -> RingElem:
    """Unbounded, memoized Dubrovnik value."""
    current = d
    total = RingElem.from_int(0)
    # switching keeps the circuits, so the traversal of d stays valid along the chain
    for node in non_descending_crossings(d):
        total = total + Z * (link_value(smooth(current, node, True)) - link_value(smooth(current, node, False)))
        current = switch_crossing(current, node)
    return total + descending_value(current)


def dubrovnik(d: Diagram, max_crossings: int | None = None) -> RingElem:
    """Dubrovnik polynomial with z = A - B, normalized to 1 on the round unknot.

    Raises:
        DepthExceeded: if the diagram has more crossings than the bound
    """
    _require_link(d)
    bound = get_settings().dubrovnik_max_crossings if max_crossings is None else max_crossings
    if d.crossing_count() > bound:
        raise DepthExceeded("dubrovnik", d.crossing_count(), bound)
    value = link_value(d)
    logger.debug(f"dubrovnik on {d.crossing_count()} crossing(s): {link_value.cache_info()}")
    return value
