"""Tests for the skein expansion of diagrams with crossings."""

import pytest

from kvpoly.calculus.embedded import (
    EmbeddedEvaluator,
    evaluate,
    expand_crossings,
    first_crossing,
    normalized,
    planarity_obstruction,
    skein_children,
    specialized_eval,
)
from kvpoly.calculus.planar import MemoCache
from kvpoly.models.verdict import PlanarityStatus
from kvpoly.oracle.statesum import bracket_statesum, kv_statesum
from kvpoly.ring import DELTA, MU, ONE, VAR_A, VAR_B, VAR_SMALL_A, RingElem, Specialization, UniLaurent
from kvpoly.topology.codec import parse
from kvpoly.topology.generate import one_crossing_family, random_diagram

A_INV = RingElem.monomial(1, 0, 0, -1)


def test_curl_values(fixture_diagram):
    assert evaluate(fixture_diagram("curl_negative")) == A_INV
    assert evaluate(fixture_diagram("curl_positive")) == VAR_SMALL_A


@pytest.mark.parametrize("name", ["curl_negative", "curl_positive", "unknot"])
def test_normalized_unknot(fixture_diagram, name):
    assert normalized(fixture_diagram(name)) == ONE


def test_skein_relation_at_each_trefoil_crossing(fixture_diagram):
    d = fixture_diagram("trefoil")
    value = evaluate(d)
    for node in range(d.n_nodes):
        children = skein_children(d, node)
        assert [w for w, _ in children] == [VAR_A, VAR_B, ONE]
        assert sum((w * evaluate(c) for w, c in children), start=RingElem.from_int(0)) == value


def test_skein_children_need_a_crossing():
    with pytest.raises(ValueError):
        skein_children(parse("V 1 1 2 2"), 0)


def test_first_crossing_is_a_crossing(fixture_diagram):
    d = fixture_diagram("linked_handcuff")
    assert d.is_crossing(first_crossing(d))


def test_expansion_has_no_crossings_left(fixture_diagram):
    states = expand_crossings(fixture_diagram("trefoil"))
    assert states
    assert all(state.crossing_count() == 0 for _, state in states.values())
    assert len(states) <= 3**3


def test_threads_agree(fixture_diagram):
    d = fixture_diagram("trefoil")
    assert evaluate(d, threads=4) == evaluate(d)
    with pytest.raises(ValueError):
        EmbeddedEvaluator(threads=0)


def test_shared_cache_across_diagrams(fixture_diagram):
    cache = MemoCache()
    evaluator = EmbeddedEvaluator(cache=cache, threads=2)
    d = fixture_diagram("trefoil")
    first = evaluator.evaluate(d)
    size, hits = len(cache), cache.hits
    assert size > 0
    assert evaluator.evaluate(d) == first
    assert len(cache) == size
    assert cache.hits > hits


def test_hopf_bracket(fixture_diagram):
    d = fixture_diagram("hopf")
    expected = UniLaurent({4: -1, -4: -1})
    assert specialized_eval(d, Specialization.BRACKET) == expected
    assert bracket_statesum(d) == expected


def test_trefoil_bracket(fixture_diagram):
    d = fixture_diagram("trefoil")
    value = specialized_eval(d, "bracket")
    assert value in (
        UniLaurent({-7: 1, -3: -1, 5: -1}),
        UniLaurent({7: 1, 3: -1, -5: -1}),
    )
    assert value == bracket_statesum(d)


def test_octahedron_against_state_sum(fixture_diagram):
    d = fixture_diagram("octahedron")
    assert evaluate(d) == kv_statesum(d, max_vertices=6)


@pytest.mark.parametrize("seed", range(6))
def test_disjoint_union_with_crossings(union, seed):
    first = random_diagram(seed % 2, 1 + seed % 2, seed)
    second = random_diagram(1, seed % 3, seed + 100)
    assert evaluate(union(first, second)) == MU * evaluate(first) * evaluate(second)


def test_double_bigon_against_state_sum(fixture_diagram):
    d = fixture_diagram("double_bigon")
    value = evaluate(d)
    assert specialized_eval(d, Specialization.PLANAR_TEST) == DELTA**2
    assert value == kv_statesum(d)
    assert value == kv_statesum(d, [1, 0])


def test_one_crossing_is_not_planar(fixture_diagram):
    verdict = planarity_obstruction(fixture_diagram("one_crossing"))
    assert verdict.status is PlanarityStatus.NOT_PLANAR
    assert verdict.computed == "0"
    assert verdict.expected == "-1*A^1 + -1*A^-1"
    assert (verdict.components, verdict.vertices, verdict.twist) == (1, 1, 0)


def test_curl_is_possibly_planar(fixture_diagram):
    verdict = planarity_obstruction(fixture_diagram("curl_positive"))
    assert verdict.status is PlanarityStatus.POSSIBLY_PLANAR
    assert verdict.expected == "A^1"
    assert verdict.computed == verdict.expected


def test_linked_handcuff_is_possibly_planar(fixture_diagram):
    verdict = planarity_obstruction(fixture_diagram("linked_handcuff"))
    assert verdict.status is PlanarityStatus.POSSIBLY_PLANAR
    assert (verdict.components, verdict.vertices, verdict.twist) == (1, 4, 2)


@pytest.mark.parametrize("seed", range(3))
def test_one_crossing_family_vanishes(seed):
    for d in one_crossing_family(seed, 4):
        assert specialized_eval(d, Specialization.PLANAR_TEST).is_zero()
        assert planarity_obstruction(d).status is PlanarityStatus.NOT_PLANAR
