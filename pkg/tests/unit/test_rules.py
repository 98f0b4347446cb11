"""Tests for the rule table."""

import copy
import itertools
import json

import pytest

from kvpoly.calculus.planar import planar_expectation
from kvpoly.calculus.rules import build_rule_table, default_rule_table, load_rule_table, rule_table_text
from kvpoly.ring import BIG_O, GAMMA, MU, ONE, VAR_A, VAR_B, XI, ZERO, Specialization, UniLaurent, specialize


@pytest.fixture
def raw_table():
    return json.loads(rule_table_text())


def test_shipped_table_loads():
    table = default_rule_table()
    assert table.version == 1
    assert set(table.identities) == {"free_circle", "monogon", "bigon", "triangle"}
    assert default_rule_table() is table


def test_structure_constant_weights():
    table = default_rule_table()
    assert table["free_circle"].children[0].weight == MU
    assert table["monogon"].children[0].weight == BIG_O
    bigon = [c.weight for c in table["bigon"].children]
    assert bigon == [ONE - VAR_A * VAR_B, GAMMA, -(VAR_A + VAR_B)]


def test_triangle_has_one_flip():
    children = default_rule_table()["triangle"].children
    assert len(children) == 9
    assert [c.flip for c in children].count(True) == 1
    assert children[0].flip
    assert [c.weight for c in children if not c.vertices and not c.flip] == [-XI, XI]


def test_load_from_path(tmp_path, raw_table):
    path = tmp_path / "rules.json"
    path.write_text(json.dumps(raw_table), encoding="utf-8")
    assert load_rule_table(path) == default_rule_table()
    assert load_rule_table() is default_rule_table()


def test_schema_violation(raw_table):
    broken = copy.deepcopy(raw_table)
    del broken["identities"][0]["children"][0]["weight"]
    with pytest.raises(ValueError, match="Invalid rule table"):
        build_rule_table(broken)


def test_unknown_identity_is_rejected(raw_table):
    broken = copy.deepcopy(raw_table)
    broken["identities"][0]["id"] = "pentagon"
    with pytest.raises(ValueError, match="Invalid rule table"):
        build_rule_table(broken)


def test_leg_used_twice(raw_table):
    broken = copy.deepcopy(raw_table)
    bigon = next(e for e in broken["identities"] if e["id"] == "bigon")
    bigon["children"][0]["arcs"] = [[1, 1], [3, 4]]
    with pytest.raises(ValueError, match="does not use each leg once"):
        build_rule_table(broken)


def test_bad_weight(raw_table):
    broken = copy.deepcopy(raw_table)
    broken["identities"][0]["children"][0]["weight"] = "2*zeta"
    with pytest.raises(ValueError):
        build_rule_table(broken)


def _leg_map(legs: int, shift: int, reflect: bool):
    """A dihedral symmetry of the legs 1..legs."""

    def g(leg: int) -> int:
        turned = -(leg - 1) if reflect else leg - 1
        return (turned + shift) % legs + 1

    return g


def _pictures(identity, g=lambda leg: leg):
    """Non-flip children as a map from leg picture to summed weight."""
    out = {}
    for child in identity.children:
        if child.flip:
            continue
        arcs = frozenset(frozenset(map(g, arc)) for arc in child.arcs)
        vertices = frozenset(frozenset(map(g, v)) for v in child.vertices)
        out[arcs, vertices] = out.get((arcs, vertices), ZERO) + child.weight
    return out


TRIANGLE_CORNERS = {frozenset({1, 2}), frozenset({3, 4}), frozenset({5, 6})}


@pytest.mark.parametrize("reflect", [False, True])
@pytest.mark.parametrize("shift", range(6))
def test_triangle_identity_is_dihedral(shift, reflect):
    triangle = default_rule_table()["triangle"]
    g = _leg_map(6, shift, reflect)
    keeps_triangle = {frozenset(map(g, pair)) for pair in TRIANGLE_CORNERS} == TRIANGLE_CORNERS
    sign = 1 if keeps_triangle else -1
    expected = {picture: weight * sign for picture, weight in _pictures(triangle).items()}
    assert _pictures(triangle, g) == expected


def test_half_of_the_symmetries_flip_the_triangle():
    flips = 0
    for shift in range(6):
        for reflect in (False, True):
            g = _leg_map(6, shift, reflect)
            flips += {frozenset(map(g, pair)) for pair in TRIANGLE_CORNERS} != TRIANGLE_CORNERS
    assert flips == 6


@pytest.mark.parametrize("shift,reflect", [(0, False), (2, False), (1, True), (3, True)])
def test_bigon_identity_symmetries(shift, reflect):
    bigon = default_rule_table()["bigon"]
    assert _pictures(bigon, _leg_map(4, shift, reflect)) == _pictures(bigon)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first], *partition]
        for i in range(len(partition)):
            yield partition[:i] + [[first, *partition[i]]] + partition[i + 1 :]


def _non_crossing(partition) -> bool:
    block = {leg: i for i, part in enumerate(partition) for leg in part}
    legs = sorted(block)
    for a, b, c, d in itertools.combinations(legs, 4):
        if block[a] == block[c] != block[b] == block[d]:
            return False
    return True


def _outside_closures(legs: int):
    """Planar ways to connect the legs outside the picture; every piece takes an even number of legs."""
    partitions = _set_partitions(list(range(1, legs + 1)))
    return [p for p in partitions if _non_crossing(p) and all(len(part) % 2 == 0 for part in p)]


def _closed_components(groups) -> int:
    """Number of classes after merging the given groups of legs."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for group in groups:
        group = list(group)
        for leg in group:
            parent[find(leg)] = find(group[0])
    return len({find(x) for x in parent})


def _closed_value(child, outside) -> UniLaurent:
    inside = [*child.arcs, *child.vertices]
    c = _closed_components([*inside, *outside])
    return specialize(child.weight, Specialization.PLANAR_TEST) * planar_expectation(c, len(child.vertices))


def _rhs(identity, outside) -> UniLaurent:
    total = UniLaurent()
    for child in identity.children:
        if not child.flip:
            total = total + _closed_value(child, outside)
    return total


@pytest.mark.parametrize(
    "outside",
    [
        [[1, 2, 3, 4, 5, 6]],
        [[1, 2], [3, 4, 5, 6]],
        [[1, 2], [3, 4], [5, 6]],
        [[1, 2], [3, 6], [4, 5]],
    ],
)
def test_triangle_identity_matches_closed_form(outside):
    # the triangle and its flip both close up to one piece with three vertices
    assert _rhs(default_rule_table()["triangle"], outside).is_zero()


def test_identities_match_closed_form_for_every_planar_closure():
    table = default_rule_table()
    for outside in _outside_closures(6):
        assert _rhs(table["triangle"], outside).is_zero(), outside
    for outside in _outside_closures(4):
        assert _rhs(table["bigon"], outside) == planar_expectation(1, 2), outside
    for outside in _outside_closures(2):
        assert _rhs(table["monogon"], outside) == planar_expectation(1, 1), outside
    assert [len(_outside_closures(n)) for n in (2, 4, 6)] == [1, 3, 12]
