"""Tests for the planar graphical calculus."""

import pytest

from kvpoly.calculus.planar import (
    MemoCache,
    PlanarEvaluator,
    apply_identity,
    continuation,
    eval_planar,
    eval_planar_closed_form,
    find_reducible,
    planar_expectation,
)
from kvpoly.errors import NoVertexNoCircle, RuleMismatch
from kvpoly.models.diagram import Diagram
from kvpoly.models.reduction import Reduction, ReductionKind
from kvpoly.ring import BIG_O, DELTA, GAMMA, MU, ONE, VAR_A, VAR_B, Specialization, UniLaurent, specialize
from kvpoly.topology.codec import parse
from kvpoly.topology.generate import random_diagram


@pytest.mark.parametrize(
    "text,kind",
    [
        ("O 2", ReductionKind.FREE_CIRCLE),
        ("O 1", ReductionKind.BARE_COMPONENT_CIRCLE),
        ("V 1 1 2 2\nO 1", ReductionKind.FREE_CIRCLE),
        ("V 1 1 2 2", ReductionKind.MONOGON),
        ("V 1 2 3 4\nV 4 3 2 1", ReductionKind.BIGON),
    ],
)
def test_find_reducible_priorities(text, kind):
    assert find_reducible(parse(text)).kind is kind


def test_find_reducible_on_empty_diagram():
    with pytest.raises(NoVertexNoCircle):
        find_reducible(Diagram())


def test_octahedron_needs_a_flip_plan(fixture_diagram):
    r = find_reducible(fixture_diagram("octahedron"))
    assert r.kind is ReductionKind.LENS_PLAN
    assert r.plan_length >= 1
    assert r.target is not None


def test_find_reducible_rejects_crossings(fixture_diagram):
    with pytest.raises(ValueError):
        find_reducible(fixture_diagram("trefoil"))


def test_bigon_identity_children(fixture_diagram):
    d = fixture_diagram("double_bigon")
    r = find_reducible(d)
    children = apply_identity(d, r)
    assert [w for w, _ in children] == [ONE - VAR_A * VAR_B, GAMMA, -(VAR_A + VAR_B)]
    assert [c.vertex_count() for _, c in children] == [0, 0, 1]


def test_monogon_identity():
    d = parse("V 1 1 2 2")
    ((weight, child),) = apply_identity(d, find_reducible(d))
    assert weight == BIG_O
    assert child.n_nodes == 0
    assert child.free_circles == 1


def test_lens_plan_flips_first(fixture_diagram):
    d = fixture_diagram("octahedron")
    r = find_reducible(d)
    children = apply_identity(d, r)
    assert len(children) == 9
    weight, flipped = children[0]
    assert weight == ONE
    assert flipped.vertex_count() == 6
    assert all(c.vertex_count() < 6 for _, c in children[1:])
    rest = continuation(r)
    if r.plan_length > 1:
        assert rest is not None and rest.flips == r.flips[1:]
    else:
        assert rest is None


@pytest.mark.parametrize(
    "text,r",
    [
        ("V 1 2 3 4\nV 4 3 2 1", Reduction(kind=ReductionKind.MONOGON, dart=0)),
        ("V 1 2 3 4\nV 4 3 2 1", Reduction(kind=ReductionKind.BIGON)),
        ("V 1 2 3 4\nV 4 3 2 1", Reduction(kind=ReductionKind.BIGON, dart=99)),
        ("V 1 2 3 4\nV 4 3 2 1", Reduction(kind=ReductionKind.LENS_PLAN)),
        ("V 1 1 2 2", Reduction(kind=ReductionKind.FREE_CIRCLE)),
        ("V 1 1 2 2", Reduction(kind=ReductionKind.BIGON, dart=0)),
        ("O 1", Reduction(kind=ReductionKind.FREE_CIRCLE)),
        ("O 2", Reduction(kind=ReductionKind.BARE_COMPONENT_CIRCLE)),
    ],
)
def test_rule_mismatch(text, r):
    with pytest.raises(RuleMismatch):
        apply_identity(parse(text), r)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_free_circles(k):
    assert eval_planar(Diagram.circles(k)) == MU ** (k - 1)


def test_empty_diagram_is_one():
    assert eval_planar(Diagram()) == ONE


def test_monogon_value():
    assert eval_planar(parse("V 1 1 2 2")) == BIG_O


def test_disjoint_union_law(union):
    monogon = parse("V 1 1 2 2")
    bigons = parse("V 1 2 3 4\nV 4 3 2 1")
    assert eval_planar(union(monogon, bigons)) == MU * BIG_O * eval_planar(bigons)


@pytest.mark.parametrize("seed", range(8))
def test_disjoint_union_law_on_random_pairs(union, seed):
    first = random_diagram(1 + seed % 4, 0, 2 * seed)
    second = random_diagram(1 + (seed + 1) % 3, 0, 2 * seed + 1)
    assert eval_planar(union(first, second)) == MU * eval_planar(first) * eval_planar(second)


def test_eval_rejects_crossings(fixture_diagram):
    with pytest.raises(ValueError):
        eval_planar(fixture_diagram("one_crossing"))


def test_octahedron_is_choice_free(fixture_diagram):
    d = fixture_diagram("octahedron")
    values = {eval_planar(d, seed) for seed in range(3)}
    values.add(eval_planar(d, strategy="search"))
    assert len(values) == 1
    assert specialize(values.pop(), Specialization.PLANAR_TEST) == DELTA**6


@pytest.mark.parametrize("seed", range(6))
def test_planar_test_matches_closed_form(seed):
    d = random_diagram(4, 0, seed)
    assert specialize(eval_planar(d), Specialization.PLANAR_TEST) == eval_planar_closed_form(d)


def test_closed_form():
    assert eval_planar_closed_form(Diagram.circles(2)) == UniLaurent.monomial(2)
    assert eval_planar_closed_form(parse("V 1 1 2 2")) == DELTA
    assert planar_expectation(0, 0, 3) == UniLaurent.monomial(1, 3)
    assert planar_expectation(2, 1, -1) == (DELTA * 2).shift(-1)


def test_memo_cache_writes_once():
    cache = MemoCache()
    assert cache.get(b"k") is None
    assert cache.setdefault(b"k", MU) == MU
    assert cache.setdefault(b"k", ONE) == MU
    assert cache.get(b"k") == MU
    assert (cache.hits, cache.misses, len(cache)) == (1, 1, 1)


def test_shared_cache_is_reused(fixture_diagram):
    cache = MemoCache()
    d = fixture_diagram("octahedron")
    first = PlanarEvaluator(cache=cache).evaluate(d)
    size = len(cache)
    assert PlanarEvaluator(cache=cache).evaluate(d) == first
    assert len(cache) == size
    assert cache.hits >= 1
