"""Brute-force state sums: the marker definition of [G] and the Kauffman bracket."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from ..config import get_settings
from ..errors import DepthExceeded
from ..models.diagram import Diagram, NodeKind
from ..ring import VAR_A, VAR_B, RingElem, UniLaurent
from ..topology.surgery import smooth
from .dubrovnik import link_value, switch_crossing

logger = logging.getLogger(__name__)

BRACKET_LOOP = UniLaurent({2: -1, -2: -1})


def _check_bounds(d: Diagram, max_vertices: int | None, max_crossings: int | None) -> None:
    settings = get_settings()
    v_bound = settings.statesum_max_vertices if max_vertices is None else max_vertices
    x_bound = settings.statesum_max_crossings if max_crossings is None else max_crossings
    if d.vertex_count() > v_bound:
        raise DepthExceeded("kv_statesum vertices", d.vertex_count(), v_bound)
    if d.crossing_count() > x_bound:
        raise DepthExceeded("kv_statesum crossings", d.crossing_count(), x_bound)


def marker_replacements(d: Diagram, node: int, marker: int) -> list[tuple[RingElem, Diagram]]:
    """The three links replacing a rigid vertex under a marker.

    Marker 0 puts the under-strand of the replacing crossing on slots 0 and 2,
    marker 1 on slots 1 and 3; the two smoothings carry weights -A and -B.
    """
    if d.is_crossing(node):
        raise ValueError(f"node {node} is not a rigid vertex")
    if marker not in (0, 1):
        raise ValueError(f"marker must be 0 or 1, got {marker}")
    crossing = d.with_kind(node, NodeKind.CROSSING)
    if marker:
        crossing = switch_crossing(crossing, node)
    return [
        (RingElem.from_int(1), crossing),
        (-VAR_A, smooth(d, node, True, marker)),
        (-VAR_B, smooth(d, node, False, marker)),
    ]


def kv_statesum(
    d: Diagram,
    markers: Sequence[int] | None = None,
    *,
    max_vertices: int | None = None,
    max_crossings: int | None = None,
) -> RingElem:
    """[G] as a sum over marker replacements of Dubrovnik values of links.

    ``markers`` gives one marker per rigid vertex in node order; all zero by default.

    Raises:
        DepthExceeded: beyond the configured vertex or crossing bound
    """
    _check_bounds(d, max_vertices, max_crossings)
    vertices = [n for n in range(d.n_nodes) if not d.is_crossing(n)]
    chosen = list(markers) if markers is not None else [0] * len(vertices)
    if len(chosen) != len(vertices):
        raise ValueError(f"expected {len(vertices)} markers, got {len(chosen)}")
    states: list[tuple[RingElem, Diagram]] = [(RingElem.from_int(1), d)]
    # highest node first, so smoothing never renumbers a vertex still to be replaced
    for node, marker in sorted(zip(vertices, chosen), reverse=True):
        states = [
            (weight * w, child) for weight, state in states for w, child in marker_replacements(state, node, marker)
        ]
    total = RingElem.from_int(0)
    for weight, link in states:
        total = total + weight * link_value(link)
    logger.debug(f"kv_statesum over {len(states)} link(s) with markers {chosen}")
    return total


def bracket_statesum(d: Diagram, max_crossings: int | None = None) -> UniLaurent:
    """Kauffman bracket by summing A^(#A - #B) (-A^2 - A^-2)^(loops - 1) over all states.

    Raises:
        DepthExceeded: beyond the configured crossing bound
    """
    if d.vertex_count():
        raise ValueError(f"a link diagram has no rigid vertices, got {d.vertex_count()}")
    bound = get_settings().dubrovnik_max_crossings if max_crossings is None else max_crossings
    if d.crossing_count() > bound:
        raise DepthExceeded("bracket", d.crossing_count(), bound)
    nodes = list(range(d.n_nodes - 1, -1, -1))
    total = UniLaurent()
    for choice in itertools.product((True, False), repeat=len(nodes)):
        state = d
        for node, a_type in zip(nodes, choice):
            state = smooth(state, node, a_type)
        n_a = sum(choice)
        loops = state.free_circles
        total = total + (BRACKET_LOOP ** (loops - 1)).shift(n_a - (len(nodes) - n_a))
    return total
