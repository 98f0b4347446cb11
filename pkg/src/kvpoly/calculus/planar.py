"""Evaluation of crossing-free diagrams by the planar graphical calculus."""

from __future__ import annotations

import logging
import random
import threading
from collections.abc import Sequence

from ..errors import NoVertexNoCircle, ReductionError, RuleMismatch, SiteMismatch
from ..models.diagram import Diagram, NodeKind, dart, node_of, slot_of
from ..models.reduction import Reduction, ReductionKind
from ..ring import DELTA, MU, ONE, ZERO, RingElem, UniLaurent
from ..topology.canonical import canonical_code
from ..topology.structure import components, faces
from ..topology.surgery import new_dart, splice
from ..topology.triangles import flip_triangle, read_bigon, read_triangle
from .lens import LensStrategy, plan_flips
from .rules import RuleChild, RuleTable, default_rule_table

logger = logging.getLogger(__name__)

WeightedChildren = list[tuple[RingElem, Diagram]]


class MemoCache:
    """Thread-safe cache in which each key is written at most once."""

    def __init__(self) -> None:
        self._values: dict[bytes, RingElem] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes) -> RingElem | None:
        with self._lock:
            value = self._values.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def setdefault(self, key: bytes, value: RingElem) -> RingElem:
        with self._lock:
            return self._values.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._values)


def _require_crossing_free(d: Diagram) -> None:
    if d.crossing_count():
        raise ValueError(f"planar calculus needs a crossing-free diagram, got {d.crossing_count()} crossings")


def find_reducible(
    d: Diagram,
    rng: random.Random | None = None,
    *,
    strategy: LensStrategy = "constructive",
    search_depth: int = 6,
) -> Reduction:
    """Locate the next configuration to rewrite.

    Priority: free circle, bare circle, monogon, bigon between distinct vertices,
    then a plan of triangle flips. ``rng`` picks among candidates of the same kind.

    Raises:
        NoVertexNoCircle: for the empty diagram
    """
    _require_crossing_free(d)
    if d.n_nodes == 0:
        if d.free_circles >= 2:
            return Reduction(kind=ReductionKind.FREE_CIRCLE)
        if d.free_circles == 1:
            return Reduction(kind=ReductionKind.BARE_COMPONENT_CIRCLE)
        raise NoVertexNoCircle()
    if d.free_circles:
        return Reduction(kind=ReductionKind.FREE_CIRCLE)

    def pick(candidates: Sequence[int]) -> int:
        return rng.choice(candidates) if rng is not None else candidates[0]

    all_faces = faces(d)
    monogons = [walk[0] for walk in all_faces if len(walk) == 1]
    if monogons:
        return Reduction(kind=ReductionKind.MONOGON, dart=pick(monogons))
    bigons = [walk[0] for walk in all_faces if len(walk) == 2 and node_of(walk[0]) != node_of(walk[1])]
    if bigons:
        return Reduction(kind=ReductionKind.BIGON, dart=pick(bigons))
    flips, target = plan_flips(d, rng=rng, strategy=strategy, search_depth=search_depth)
    logger.debug(f"lens plan with {len(flips)} flip(s) on {d.n_nodes} vertices")
    return Reduction(kind=ReductionKind.LENS_PLAN, flips=tuple(flips), target=target)


def _child(d: Diagram, removed: Sequence[int], legs: Sequence[int], child: RuleChild) -> Diagram:
    links = [(legs[i - 1], legs[j - 1]) for i, j in child.arcs]
    for k, rotation in enumerate(child.vertices):
        links.extend((new_dart(d, k, r), legs[leg - 1]) for r, leg in enumerate(rotation))
    kinds = tuple(NodeKind.VERTEX for _ in child.vertices)
    return splice(d, removed, kinds, links)


def apply_identity(d: Diagram, r: Reduction, table: RuleTable | None = None) -> WeightedChildren:
    """Rewrite the located configuration as a weighted list of diagrams.

    For a lens plan only the first scheduled flip is applied; the flipped diagram
    comes first in the result.

    Raises:
        RuleMismatch: if ``r`` does not describe a configuration of ``d``
    """
    table = table or default_rule_table()
    if r.kind in (ReductionKind.FREE_CIRCLE, ReductionKind.BARE_COMPONENT_CIRCLE):
        if d.free_circles < 1:
            raise RuleMismatch("no free circle")
        if r.kind is ReductionKind.BARE_COMPONENT_CIRCLE:
            if d.n_nodes or d.free_circles != 1:
                raise RuleMismatch("diagram is not a single circle")
            return [(ONE, Diagram())]
        if d.n_nodes == 0 and d.free_circles < 2:
            raise RuleMismatch("the last circle is not disjoint from anything")
        (child,) = table["free_circle"].children
        return [(child.weight, d.with_free_circles(d.free_circles - 1))]

    if r.dart is None and r.kind is not ReductionKind.LENS_PLAN:
        raise RuleMismatch(f"{r.kind.value} without a site")
    if r.dart is not None and not 0 <= r.dart < d.n_darts:
        raise RuleMismatch(f"dart {r.dart} out of range")

    if r.kind is ReductionKind.MONOGON:
        assert r.dart is not None
        n, s = node_of(r.dart), slot_of(r.dart)
        if d.pairing[r.dart] != dart(n, s + 1) or d.is_crossing(n):
            raise RuleMismatch(f"dart {r.dart} is not on a monogon")
        legs = (dart(n, s + 2), dart(n, s + 3))
        return [(c.weight, _child(d, (n,), legs, c)) for c in table["monogon"].children]

    if r.kind is ReductionKind.BIGON:
        assert r.dart is not None
        try:
            bigon = read_bigon(d, r.dart)
        except SiteMismatch as e:
            raise RuleMismatch(str(e)) from e
        if d.is_crossing(bigon.p) or d.is_crossing(bigon.q):
            raise RuleMismatch("bigon touches a crossing")
        return [(c.weight, _child(d, bigon.nodes, bigon.legs, c)) for c in table["bigon"].children]

    if not r.flips:
        raise RuleMismatch("lens plan has no flips left")
    try:
        tri = read_triangle(d, r.flips[0])
    except SiteMismatch as e:
        raise RuleMismatch(str(e)) from e
    if any(d.is_crossing(n) for n in tri.nodes):
        raise RuleMismatch("triangle touches a crossing")
    children = sorted(table["triangle"].children, key=lambda c: not c.flip)
    result: WeightedChildren = []
    for c in children:
        child = flip_triangle(d, tri) if c.flip else _child(d, tri.nodes, tri.legs, c)
        result.append((c.weight, child))
    return result


def continuation(r: Reduction) -> Reduction | None:
    """What remains of a lens plan once its first flip has been applied."""
    if r.kind is not ReductionKind.LENS_PLAN or len(r.flips) <= 1:
        return None
    return Reduction(kind=ReductionKind.LENS_PLAN, flips=r.flips[1:], target=r.target)


class PlanarEvaluator:
    """Evaluates crossing-free diagrams, memoizing on canonical codes."""

    def __init__(
        self,
        table: RuleTable | None = None,
        *,
        seed: int | None = None,
        cache: MemoCache | None = None,
        strategy: LensStrategy = "constructive",
        search_depth: int = 6,
    ):
        self.table = table or default_rule_table()
        self.rng = random.Random(seed) if seed is not None else None
        self.cache = cache if cache is not None else MemoCache()
        self.strategy = strategy
        self.search_depth = search_depth
        self._rng_lock = threading.Lock()

    def evaluate(self, d: Diagram) -> RingElem:
        _require_crossing_free(d)
        return self._eval(d, None, expect_local=False)

    def _locate(self, d: Diagram) -> Reduction:
        with self._rng_lock:
            return find_reducible(d, self.rng, strategy=self.strategy, search_depth=self.search_depth)

    def _eval(self, d: Diagram, plan: Reduction | None, *, expect_local: bool) -> RingElem:
        if d.n_nodes == 0:
            return MU ** (d.free_circles - 1) if d.free_circles else ONE
        key = canonical_code(d)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        r = plan if plan is not None else self._locate(d)
        if expect_local and r.kind is ReductionKind.LENS_PLAN:
            raise ReductionError("flip plan ended without exposing a monogon or bigon")
        total = ZERO
        for index, (weight, child) in enumerate(apply_identity(d, r, self.table)):
            if weight.is_zero():
                continue
            flipped = r.kind is ReductionKind.LENS_PLAN and index == 0
            self._check_progress(d, r, child, flipped)
            rest = continuation(r) if flipped else None
            total = total + weight * self._eval(child, rest, expect_local=flipped and rest is None)
        return self.cache.setdefault(key, total)

    @staticmethod
    def _check_progress(parent: Diagram, r: Reduction, child: Diagram, flipped: bool) -> None:
        before = (parent.n_nodes, r.plan_length, parent.free_circles)
        after = (child.n_nodes, r.plan_length - 1 if flipped else 0, child.free_circles)
        if not after < before:
            raise ReductionError(f"no progress: {before} -> {after} under {r.kind.value}")


def eval_planar(
    d: Diagram,
    choice_seed: int | None = None,
    *,
    table: RuleTable | None = None,
    cache: MemoCache | None = None,
    strategy: LensStrategy = "constructive",
    search_depth: int = 6,
) -> RingElem:
    """Value of a crossing-free diagram; the unknot is 1 and ``O k`` is mu^(k-1)."""
    evaluator = PlanarEvaluator(table, seed=choice_seed, cache=cache, strategy=strategy, search_depth=search_depth)
    return evaluator.evaluate(d)


def planar_expectation(n_components: int, n_vertices: int, twist: int = 0) -> UniLaurent:
    """2^(c-1) (-A - A^-1)^v A^t, with the empty diagram taken as 1."""
    if n_components == 0:
        return UniLaurent.monomial(1, twist)
    return ((DELTA**n_vertices) * (2 ** (n_components - 1))).shift(twist)


def eval_planar_closed_form(d: Diagram) -> UniLaurent:
    """The value at B = A^-1, a = A, read off from components and vertices."""
    _require_crossing_free(d)
    return planar_expectation(components(d), d.vertex_count())
