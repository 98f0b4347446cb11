"""Isotopy moves and the sites they apply to."""

from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator


class MoveKind(str, Enum):
    CURL_INSERT = "curl_insert"
    CURL_REMOVE = "curl_remove"
    R2_INSERT = "r2_insert"
    R2_REMOVE = "r2_remove"
    R3_SLIDE = "r3_slide"
    VERTEX_SLIDE = "vertex_slide"
    VERTEX_TWIST = "vertex_twist"


class MoveSpec(BaseModel):
    """A move together with the site it applies to.

    Sites by move:
        curl_insert: ``dart`` on the edge to kink, or ``None`` to kink a free circle;
            ``sign`` and ``side`` choose the curl.
        curl_remove: ``node``, a crossing with two adjacent slots joined.
        r2_insert: ``dart`` and ``dart2`` on a common face and distinct edges; ``over``
            tells whether the strand of ``dart`` passes over.
        r2_remove, r3_slide, vertex_slide: ``dart``, a dart of the bigon or triangle face.
        vertex_twist: ``node`` and ``corner`` (the corner between slots k and k+1),
            ``sign`` the direction of the half turn.
    """

    model_config = ConfigDict(frozen=True)

    kind: MoveKind = Field(..., description="Which move to apply")
    dart: int | None = Field(default=None, description="Primary dart of the site")
    dart2: int | None = Field(default=None, description="Second dart (r2_insert)")
    node: int | None = Field(default=None, description="Node of the site (curl_remove, vertex_twist)")
    corner: int = Field(default=0, ge=0, le=3, description="Corner k between slots k and k+1 (vertex_twist)")
    sign: int = Field(default=1, description="+1 or -1")
    side: Literal["left", "right"] = Field(default="left", description="Side of the edge the curl lies on")
    over: bool = Field(default=False, description="Whether the first strand is over (r2_insert)")

    @field_validator("sign")
    @classmethod
    def validate_sign(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {v}")
        return v

    @classmethod
    def curl_insert(cls, dart: int | None, sign: int, side: Literal["left", "right"] = "left") -> MoveSpec:
        return cls(kind=MoveKind.CURL_INSERT, dart=dart, sign=sign, side=side)

    @classmethod
    def curl_remove(cls, node: int) -> MoveSpec:
        return cls(kind=MoveKind.CURL_REMOVE, node=node)

    @classmethod
    def r2_insert(cls, dart: int, dart2: int, over: bool) -> MoveSpec:
        return cls(kind=MoveKind.R2_INSERT, dart=dart, dart2=dart2, over=over)

    @classmethod
    def r2_remove(cls, dart: int) -> MoveSpec:
        return cls(kind=MoveKind.R2_REMOVE, dart=dart)

    @classmethod
    def r3_slide(cls, dart: int) -> MoveSpec:
        return cls(kind=MoveKind.R3_SLIDE, dart=dart)

    @classmethod
    def vertex_slide(cls, dart: int) -> MoveSpec:
        return cls(kind=MoveKind.VERTEX_SLIDE, dart=dart)

    @classmethod
    def vertex_twist(cls, node: int, corner: int, sign: int) -> MoveSpec:
        return cls(kind=MoveKind.VERTEX_TWIST, node=node, corner=corner, sign=sign)
