"""Result of the planarity obstruction."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PlanarityStatus(str, Enum):
    NOT_PLANAR = "NOT_PLANAR"
    POSSIBLY_PLANAR = "POSSIBLY_PLANAR"


class Verdict(BaseModel):
    """Outcome of comparing the specialized polynomial against the planar closed form.

    ``computed`` and ``expected`` are rendered UniLaurent values.
    """

    model_config = ConfigDict(frozen=True)

    status: PlanarityStatus
    computed: str = Field(..., description="Specialized polynomial of the diagram")
    expected: str = Field(..., description="Closed form the polynomial must equal if the graph is planar")
    components: int = Field(..., ge=0)
    vertices: int = Field(..., ge=0)
    twist: int

    @model_validator(mode="after")
    def check_witness(self) -> Verdict:
        if self.status is PlanarityStatus.NOT_PLANAR and self.computed == self.expected:
            raise ValueError("a NOT_PLANAR verdict needs differing polynomials")
        return self
