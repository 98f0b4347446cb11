"""Reducible configurations located by the planar calculus."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class ReductionKind(str, Enum):
    FREE_CIRCLE = "free_circle"
    BARE_COMPONENT_CIRCLE = "bare_component_circle"
    MONOGON = "monogon"
    BIGON = "bigon"
    LENS_PLAN = "lens_plan"


class Reduction(BaseModel):
    """Where a planar identity applies.

    ``dart`` is a dart of the monogon or bigon face. For a lens plan,
    ``flips`` lists one triangle-face dart per flip, each expressed in the
    numbering of the diagram the flip is applied to; the diagram left after the
    last flip contains the bigon face at ``target``.
    """

    model_config = ConfigDict(frozen=True)

    kind: ReductionKind
    dart: int | None = Field(default=None, description="Face dart of a monogon or bigon")
    flips: tuple[int, ...] = Field(default=(), description="Triangle face darts, one per scheduled flip")
    target: int | None = Field(default=None, description="Bigon face dart after the last flip")

    @property
    def plan_length(self) -> int:
        return len(self.flips)
