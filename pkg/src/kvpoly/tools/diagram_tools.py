"""Diagram tools for the MCP server.

Each tool takes a diagram as .kvg text and returns a pydantic model.
"""

from __future__ import annotations

import logging
from typing import Literal

from pydantic import BaseModel, Field

from ..calculus.embedded import EmbeddedEvaluator, planarity_obstruction
from ..config import get_settings
from ..models.verdict import Verdict
from ..oracle.statesum import kv_statesum
from ..ring import Specialization, specialize
from ..topology.codec import parse, serialize
from ..topology.generate import random_diagram as generate_diagram
from ..topology.structure import circuits, components, twist_number, writhe

logger = logging.getLogger(__name__)

SpecName = Literal["generic", "planar_test", "bracket", "yamada"]


class Evaluation(BaseModel):
    """Polynomial of a diagram."""

    polynomial: str = Field(..., description="Canonical rendering of the value")
    specialization: SpecName = Field(..., description="Which specialization was applied")
    vertices: int = Field(..., description="Number of rigid vertices")
    crossings: int = Field(..., description="Number of crossings")


class TwistReport(BaseModel):
    """Twisting number and its per-circuit writhes."""

    twist: int = Field(..., description="Sum of the circuit writhes")
    writhes: list[int] = Field(..., description="Writhe of each straight-ahead circuit")
    components: int = Field(..., description="Connected components, free circles included")


class OracleComparison(BaseModel):
    """Evaluator against the marker state sum."""

    agree: bool
    evaluated: str = Field(..., description="Value from the skein expansion")
    state_sum: str = Field(..., description="Value from the marker state sum")


class GeneratedDiagram(BaseModel):
    kvg: str = Field(..., description="Diagram in canonical .kvg form")
    seed: int


def _evaluator() -> EmbeddedEvaluator:
    return EmbeddedEvaluator.from_settings(get_settings())


def evaluate_diagram(kvg: str, specialization: SpecName = "generic") -> Evaluation:
    """Evaluate a diagram, optionally specialized.

    Args:
        kvg: Diagram in .kvg format
        specialization: generic, planar_test, bracket or yamada

    Returns:
        Evaluation with the rendered polynomial

    Raises:
        DiagramError: If the text is not a valid diagram
    """
    d = parse(kvg)
    value = _evaluator().evaluate(d)
    if specialization == "generic":
        rendered = value.render()
    else:
        rendered = specialize(value, Specialization(specialization)).render()
    return Evaluation(
        polynomial=rendered, specialization=specialization, vertices=d.vertex_count(), crossings=d.crossing_count()
    )


def twisting_number(kvg: str) -> TwistReport:
    """Twisting number of a diagram."""
    d = parse(kvg)
    return TwistReport(twist=twist_number(d), writhes=[writhe(d, w) for w in circuits(d)], components=components(d))


def check_planarity(kvg: str) -> Verdict:
    """Run the planarity obstruction; NOT_PLANAR is a proof, POSSIBLY_PLANAR is not."""
    return planarity_obstruction(parse(kvg), _evaluator())


def compare_with_oracle(kvg: str) -> OracleComparison:
    """Compare the skein evaluator with the marker state sum on a small diagram.

    Raises:
        DepthExceeded: If the diagram is beyond the state sum bounds
    """
    d = parse(kvg)
    expected = kv_statesum(d)
    value = _evaluator().evaluate(d)
    logger.info(f"oracle comparison on {d.n_nodes} node(s)")
    return OracleComparison(agree=value == expected, evaluated=value.render(), state_sum=expected.render())


def random_diagram(vertices: int, crossings: int, seed: int = 0) -> GeneratedDiagram:
    """Generate a random valid diagram with the given node counts."""
    return GeneratedDiagram(kvg=serialize(generate_diagram(vertices, crossings, seed)), seed=seed)
