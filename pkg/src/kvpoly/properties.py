"""Randomized property corpus run by ``kvpoly selftest``."""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable

import sympy
from pydantic import BaseModel, Field

from .calculus.embedded import EmbeddedEvaluator, normalized, planarity_obstruction, specialized_eval
from .calculus.planar import eval_planar, eval_planar_closed_form
from .config import Settings
from .errors import KVPolyError
from .models.diagram import Diagram
from .models.move import MoveKind
from .models.verdict import PlanarityStatus
from .oracle.statesum import bracket_statesum, kv_statesum
from .ring import BIG_O, GAMMA, MU, SYMBOLS, VAR_A, VAR_B, XI, RingElem, Specialization, specialize
from .topology.codec import parse
from .topology.generate import framing_change, one_crossing_family, random_diagram, random_move
from .topology.structure import circuits, twist_number, writhe

logger = logging.getLogger(__name__)

_GROWING = {MoveKind.CURL_INSERT, MoveKind.R2_INSERT, MoveKind.VERTEX_TWIST}

TREFOIL = "X 1 5 6 2\nX 3 1 2 4\nX 5 3 4 6\n"
HOPF = "X 1 3 4 2\nX 3 1 2 4\n"


class PropertyResult(BaseModel):
    """Outcome of one property over its corpus."""

    name: str = Field(..., description="Property name")
    passed: bool = Field(..., description="Whether every case held")
    cases: int = Field(..., ge=0, description="Number of cases checked")
    detail: str = Field(default="", description="First failure, if any")
    seconds: float = Field(default=0.0, ge=0, description="Wall time")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name} ({self.cases} cases){suffix}"


class Failure(Exception):
    """A property did not hold."""


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise Failure(message)


def structure_constants(seed: int, size: int, settings: Settings) -> int:
    upper, lower, a = SYMBOLS["A"], SYMBOLS["B"], SYMBOLS["a"]
    definitions = {
        "mu": (MU, (a - 1 / a) / (upper - lower) + 1),
        "bigO": (BIG_O, (upper / a - lower * a) / (upper - lower) - (upper + lower)),
        "gamma": (GAMMA, (lower**2 * a - upper**2 / a) / (upper - lower) + upper * lower),
        "xi": (XI, (lower**3 * a - upper**3 / a) / (upper - lower)),
    }
    for name, (value, expr) in definitions.items():
        _check(sympy.simplify(value.to_sympy() - expr) == 0, f"{name} = {value.render()}")
    a_elem, a_inv = RingElem.monomial(1, 0, 0, 1), RingElem.monomial(1, 0, 0, -1)
    _check(BIG_O + VAR_A * MU + VAR_B == a_elem, "bigO + A mu + B != a")
    _check(BIG_O + VAR_A + VAR_B * MU == a_inv, "bigO + A + B mu != a^-1")
    return 6


def _planar_corpus(seed: int, size: int) -> list[Diagram]:
    rng = random.Random(seed)
    return [random_diagram(rng.randint(1, 8), 0, rng.randrange(2**31)) for _ in range(size)]


def strategy_independence(seed: int, size: int, settings: Settings) -> int:
    for d in _planar_corpus(seed, size):
        values = {
            eval_planar(d, choice_seed=s, strategy=settings.lens_strategy, search_depth=settings.search_depth)
            for s in range(5)
        }
        _check(len(values) == 1, f"{len(values)} distinct values on {d.n_nodes} vertices")
    return size


def planar_closed_form(seed: int, size: int, settings: Settings) -> int:
    for d in _planar_corpus(seed, size):
        planar = eval_planar(d, strategy=settings.lens_strategy, search_depth=settings.search_depth)
        value = specialize(planar, Specialization.PLANAR_TEST)
        _check(value == eval_planar_closed_form(d), f"planar test gives {value.render()}")
    return size


def move_invariance(seed: int, size: int, settings: Settings) -> int:
    rng = random.Random(seed)
    evaluator = EmbeddedEvaluator.from_settings(settings)
    checked = 0
    for _ in range(size):
        d = random_diagram(rng.randint(0, 4), rng.randint(0, 4), rng.randrange(2**31))
        value = evaluator.evaluate(d)
        for _ in range(4):
            kinds = None if d.crossing_count() < 5 else [k for k in MoveKind if k not in _GROWING]
            found = random_move(d, rng, kinds)
            if found is None:
                break
            move, moved = found
            change = framing_change(d, move)
            moved_value = evaluator.evaluate(moved)
            _check(moved_value == RingElem.monomial(1, 0, 0, change) * value, f"{move.kind.value} changes the value")
            _check(twist_number(moved) == twist_number(d) + change, f"{move.kind.value} changes t wrongly")
            _check(normalized(moved, evaluator) == normalized(d, evaluator), f"{move.kind.value} changes a^-t [G]")
            d, value = moved, moved_value
            checked += 1
    return checked


def oracle_equivalence(seed: int, size: int, settings: Settings) -> int:
    rng = random.Random(seed)
    evaluator = EmbeddedEvaluator.from_settings(settings)
    for _ in range(size):
        d = random_diagram(rng.randint(0, 3), rng.randint(0, 3), rng.randrange(2**31))
        value = evaluator.evaluate(d)
        for _ in range(3):
            markers = [rng.randrange(2) for _ in range(d.vertex_count())]
            _check(kv_statesum(d, markers) == value, f"state sum differs with markers {markers}")
    return size


def vanishing_one_crossing(seed: int, size: int, settings: Settings) -> int:
    count = max(10, size // 5)
    evaluator = EmbeddedEvaluator.from_settings(settings)
    for d in one_crossing_family(seed, count):
        value = specialized_eval(d, Specialization.PLANAR_TEST, evaluator)
        _check(value.is_zero(), f"planar test gives {value.render()}")
        _check(planarity_obstruction(d, evaluator).status is PlanarityStatus.NOT_PLANAR, "obstruction missed")
    return count


def bracket_regression(seed: int, size: int, settings: Settings) -> int:
    rng = random.Random(seed)
    corpus = [parse(TREFOIL), parse(HOPF)]
    corpus += [random_diagram(0, rng.randint(1, 6), rng.randrange(2**31)) for _ in range(max(size // 2, 1))]
    evaluator = EmbeddedEvaluator.from_settings(settings)
    for d in corpus:
        value = specialized_eval(d, Specialization.BRACKET, evaluator)
        _check(value == bracket_statesum(d), f"bracket mismatch on {d.n_nodes} crossings")
    return len(corpus)


def orientation_independence(seed: int, size: int, settings: Settings) -> int:
    rng = random.Random(seed)
    for _ in range(size):
        d = random_diagram(rng.randint(0, 3), rng.randint(1, 5), rng.randrange(2**31))
        for walk in circuits(d):
            reverse = tuple((n, (t + 2) % 4) for n, t in reversed(walk))
            _check(writhe(d, reverse) == writhe(d, walk), "writhe depends on the orientation")
    return size


PROPERTIES: dict[str, Callable[[int, int, Settings], int]] = {
    "structure_constants": structure_constants,
    "strategy_independence": strategy_independence,
    "planar_closed_form": planar_closed_form,
    "move_invariance": move_invariance,
    "oracle_equivalence": oracle_equivalence,
    "vanishing_one_crossing": vanishing_one_crossing,
    "bracket_regression": bracket_regression,
    "orientation_independence": orientation_independence,
}


def run_property(name: str, seed: int, size: int, settings: Settings | None = None) -> PropertyResult:
    start = time.perf_counter()
    try:
        cases = PROPERTIES[name](seed, size, settings or Settings())
        result = PropertyResult(name=name, passed=True, cases=cases)
    except (Failure, KVPolyError) as e:
        result = PropertyResult(name=name, passed=False, cases=0, detail=str(e))
    result = result.model_copy(update={"seconds": time.perf_counter() - start})
    logger.info(f"{result.line()} in {result.seconds:.1f}s")
    return result


def run_all(seed: int = 0, size: int = 50, settings: Settings | None = None) -> list[PropertyResult]:
    """Run every registered property; evaluators follow ``settings`` (defaults when None)."""
    return [run_property(name, seed, size, settings) for name in PROPERTIES]
