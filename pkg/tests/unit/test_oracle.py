"""Tests for the reference link and state-sum oracles."""

import random

import pytest

from kvpoly.calculus.embedded import evaluate
from kvpoly.errors import DepthExceeded
from kvpoly.models.move import MoveKind
from kvpoly.oracle.dubrovnik import Z, dubrovnik, link_value, non_descending_crossings, switch_crossing
from kvpoly.oracle.statesum import bracket_statesum, kv_statesum, marker_replacements
from kvpoly.ring import BIG_O, MU, ONE, VAR_A, VAR_B, VAR_SMALL_A, RingElem, UniLaurent
from kvpoly.topology.canonical import canonical_code
from kvpoly.topology.codec import parse
from kvpoly.topology.generate import framing_change, random_diagram, random_move
from kvpoly.topology.structure import circuits
from kvpoly.topology.surgery import smooth


@pytest.mark.parametrize(
    "name,expected",
    [
        ("unknot", ONE),
        ("curl_positive", VAR_SMALL_A),
        ("curl_negative", RingElem.monomial(1, 0, 0, -1)),
    ],
)
def test_dubrovnik_values(fixture_diagram, name, expected):
    assert dubrovnik(fixture_diagram(name)) == expected


def test_dubrovnik_of_unlink():
    assert dubrovnik(parse("O 2")) == MU
    assert dubrovnik(parse("O 3")) == MU**2


def test_dubrovnik_matches_evaluation_on_links(fixture_diagram):
    for name in ("trefoil", "hopf"):
        d = fixture_diagram(name)
        assert dubrovnik(d) == evaluate(d)


def test_switching_relation_at_each_crossing(fixture_diagram):
    d = fixture_diagram("trefoil")
    for node in range(d.n_nodes):
        lhs = dubrovnik(d) - dubrovnik(switch_crossing(d, node))
        rhs = Z * (dubrovnik(smooth(d, node, True)) - dubrovnik(smooth(d, node, False)))
        assert lhs == rhs


def test_switching_keeps_circuits(fixture_diagram):
    d = fixture_diagram("hopf")
    switched = switch_crossing(d, 0)
    assert [len(w) for w in circuits(switched)] == [len(w) for w in circuits(d)]
    assert canonical_code(switch_crossing(switched, 0)) == canonical_code(d)


def test_switching_every_crossing_mirrors_the_trefoil(fixture_diagram):
    d = fixture_diagram("trefoil")
    mirror = d
    for node in range(d.n_nodes):
        mirror = switch_crossing(mirror, node)
    assert dubrovnik(mirror) != dubrovnik(d)


def test_switch_needs_a_crossing():
    with pytest.raises(ValueError):
        switch_crossing(parse("V 1 1 2 2"), 0)


def test_descending_diagram_needs_no_switch(fixture_diagram):
    d = fixture_diagram("curl_positive")
    assert non_descending_crossings(d) in ([], [0])
    assert link_value(d) == VAR_SMALL_A


def test_dubrovnik_bounds(fixture_diagram):
    with pytest.raises(DepthExceeded) as excinfo:
        dubrovnik(fixture_diagram("trefoil"), max_crossings=2)
    assert (excinfo.value.size, excinfo.value.bound) == (3, 2)
    with pytest.raises(ValueError):
        dubrovnik(fixture_diagram("monogon"))


@pytest.mark.parametrize("markers", [[0], [1]])
def test_state_sum_of_monogon(markers):
    assert kv_statesum(parse("V 1 1 2 2"), markers) == BIG_O


def test_marker_replacements():
    d = parse("V 1 1 2 2")
    weights = [w for w, _ in marker_replacements(d, 0, 0)]
    assert weights == [ONE, -VAR_A, -VAR_B]
    assert marker_replacements(d, 0, 1)[0][1].crossing_count() == 1
    with pytest.raises(ValueError):
        marker_replacements(d, 0, 2)
    with pytest.raises(ValueError):
        marker_replacements(parse("X 1 1 2 2"), 0, 0)


def test_state_sum_marker_count():
    with pytest.raises(ValueError):
        kv_statesum(parse("V 1 1 2 2"), [0, 1])


def test_state_sum_bounds(fixture_diagram):
    with pytest.raises(DepthExceeded):
        kv_statesum(fixture_diagram("octahedron"))
    with pytest.raises(DepthExceeded):
        kv_statesum(fixture_diagram("trefoil"), max_crossings=2)


def test_state_sum_with_a_crossing(fixture_diagram):
    d = fixture_diagram("one_crossing")
    assert kv_statesum(d) == evaluate(d)
    assert kv_statesum(d, [1]) == evaluate(d)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("O 1", UniLaurent.monomial(1)),
        ("O 2", UniLaurent({2: -1, -2: -1})),
        ("X 1 1 2 2", UniLaurent.monomial(-1, -3)),
        ("X 1 2 2 1", UniLaurent.monomial(-1, 3)),
    ],
)
def test_bracket_state_sum(text, expected):
    assert bracket_statesum(parse(text)) == expected


def test_bracket_state_sum_rejects_vertices_and_large_inputs(fixture_diagram):
    with pytest.raises(ValueError):
        bracket_statesum(parse("V 1 1 2 2"))
    with pytest.raises(DepthExceeded):
        bracket_statesum(fixture_diagram("trefoil"), max_crossings=1)


LINK_MOVES = [MoveKind.CURL_INSERT, MoveKind.CURL_REMOVE, MoveKind.R2_INSERT, MoveKind.R2_REMOVE, MoveKind.R3_SLIDE]


def _random_link(seed: int):
    return random_diagram(0, 1 + seed % 4, seed)


@pytest.mark.parametrize("seed", range(8))
def test_switching_relation_on_random_links(seed):
    d = _random_link(seed)
    for node in d.crossings():
        lhs = dubrovnik(d) - dubrovnik(switch_crossing(d, node))
        rhs = Z * (dubrovnik(smooth(d, node, True)) - dubrovnik(smooth(d, node, False)))
        assert lhs == rhs


@pytest.mark.parametrize("seed", range(8))
def test_dubrovnik_matches_evaluation_on_random_links(seed):
    d = _random_link(seed)
    assert dubrovnik(d) == evaluate(d)


@pytest.mark.parametrize("seed", range(8))
def test_link_moves_scale_by_framing(seed):
    rng = random.Random(seed)
    d = random_diagram(0, 1 + seed % 3, seed)
    value = dubrovnik(d)
    for _ in range(2):
        found = random_move(d, rng, LINK_MOVES)
        assert found is not None
        move, moved = found
        moved_value = dubrovnik(moved)
        assert moved_value == RingElem.monomial(1, 0, 0, framing_change(d, move)) * value
        d, value = moved, moved_value
