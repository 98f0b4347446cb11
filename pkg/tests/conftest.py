"""Global test configuration and fixtures."""

import random
from collections.abc import Callable
from pathlib import Path

import pytest

from kvpoly.models.diagram import Diagram
from kvpoly.topology.codec import load


@pytest.fixture
def test_data_dir() -> Path:
    """Return the path to the test data directory."""
    return Path(__file__).parent / "fixtures" / "data"


@pytest.fixture
def fixture_diagram(test_data_dir: Path) -> Callable[[str], Diagram]:
    """Load a fixture diagram by name, without the .kvg suffix."""

    def _load(name: str) -> Diagram:
        return load(test_data_dir / f"{name}.kvg")

    return _load


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)


def disjoint_union(first: Diagram, second: Diagram) -> Diagram:
    """Place two diagrams side by side."""
    offset = first.n_darts
    pairing = first.pairing + tuple(p + offset for p in second.pairing)
    return Diagram.build(first.kinds + second.kinds, pairing, first.free_circles + second.free_circles)


def relabel(d: Diagram, perm: list[int], rotations: list[int]) -> Diagram:
    """Renumber nodes by ``perm`` and turn node n's slots by ``rotations[n]``."""

    def moved(h: int) -> int:
        n, s = divmod(h, 4)
        return 4 * perm[n] + (s + rotations[n]) % 4

    pairing = [0] * d.n_darts
    for h, p in enumerate(d.pairing):
        pairing[moved(h)] = moved(p)
    kinds = [d.kinds[0]] * d.n_nodes
    for n, kind in enumerate(d.kinds):
        kinds[perm[n]] = kind
    return Diagram.build(tuple(kinds), tuple(pairing), d.free_circles)


@pytest.fixture
def union() -> Callable[[Diagram, Diagram], Diagram]:
    return disjoint_union


@pytest.fixture
def relabeled() -> Callable[[Diagram, list[int], list[int]], Diagram]:
    return relabel


def turn_over(d: Diagram) -> Diagram:
    """Reflect the diagram and switch every crossing, which turns it over in space."""
    offset = [1 if d.is_crossing(n) else 0 for n in range(d.n_nodes)]

    def moved(h: int) -> int:
        n, s = divmod(h, 4)
        return 4 * n + (offset[n] - s) % 4

    pairing = [0] * d.n_darts
    for h, p in enumerate(d.pairing):
        pairing[moved(h)] = moved(p)
    return Diagram.build(d.kinds, tuple(pairing), d.free_circles)


def _extend(first: Diagram, second: Diagram, root: int, image: int, offset: int, direction: int) -> bool:
    node_map = {root: image}
    offsets = {root: offset}
    stack = [root]
    while stack:
        n = stack.pop()
        for s in range(4):
            p = first.pairing[4 * n + s]
            target = second.pairing[4 * node_map[n] + (offsets[n] + direction * s) % 4]
            m, t = divmod(p, 4)
            m2, t2 = divmod(target, 4)
            if m not in node_map:
                if m2 in node_map.values() or first.kinds[m] is not second.kinds[m2]:
                    return False
                node_map[m] = m2
                offsets[m] = (t2 - direction * t) % 4
                if first.is_crossing(m) and offsets[m] % 2 != (0 if direction == 1 else 1):
                    return False
                stack.append(m)
            elif node_map[m] != m2 or (offsets[m] + direction * t) % 4 != t2:
                return False
    return len(node_map) == first.n_nodes


def rotation_isomorphic(first: Diagram, second: Diagram) -> bool:
    """Search for a node bijection with slot offsets carrying one rotation system onto the other.

    Both orientations are tried; the clockwise one also swaps over and under.
    Only diagrams whose nodes form a single connected piece are supported.
    """
    if (first.n_nodes, first.free_circles) != (second.n_nodes, second.free_circles):
        return False
    if first.n_nodes == 0:
        return True
    for image in range(second.n_nodes):
        if first.kinds[0] is not second.kinds[image]:
            continue
        for offset in range(4):
            for direction in (1, -1):
                if first.is_crossing(0) and offset % 2 != (0 if direction == 1 else 1):
                    continue
                if _extend(first, second, 0, image, offset, direction):
                    return True
    return False


@pytest.fixture
def turned_over() -> Callable[[Diagram], Diagram]:
    return turn_over


@pytest.fixture
def isomorphic() -> Callable[[Diagram, Diagram], bool]:
    return rotation_isomorphic
