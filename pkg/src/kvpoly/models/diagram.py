"""Data model for 4-valent rigid-vertex graph diagrams."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class NodeKind(str, Enum):
    """A node is either a rigid vertex or a crossing."""

    VERTEX = "V"
    CROSSING = "X"


def dart(node: int, slot: int) -> int:
    """Index of slot ``slot`` (taken mod 4) of ``node``."""
    return 4 * node + slot % 4


def node_of(h: int) -> int:
    return h // 4


def slot_of(h: int) -> int:
    return h % 4


class Diagram(BaseModel):
    """A genus-0 rotation system whose nodes are vertices or crossings.

    Slots are numbered 0..3 counterclockwise. Half-edge ("dart") ``4*n + s`` is
    slot ``s`` of node ``n``, and ``pairing[h]`` is the dart at the other end
    of its edge. For a crossing, slots 0 and 2 carry the under-strand.
    """

    model_config = ConfigDict(frozen=True)

    kinds: tuple[NodeKind, ...] = Field(default=(), description="Kind of each node, indexed by node number")
    pairing: tuple[int, ...] = Field(default=(), description="Fixed-point-free involution on darts")
    free_circles: int = Field(default=0, ge=0, description="Node-less simple closed curves")

    @field_validator("pairing")
    @classmethod
    def validate_involution(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        for h, p in enumerate(v):
            if not 0 <= p < len(v) or p == h or v[p] != h:
                raise ValueError(f"pairing is not a fixed-point-free involution at dart {h}")
        return v

    @model_validator(mode="after")
    def validate_sizes(self) -> Diagram:
        if len(self.pairing) != 4 * len(self.kinds):
            raise ValueError(f"{len(self.kinds)} nodes need {4 * len(self.kinds)} darts, got {len(self.pairing)}")
        return self

    @classmethod
    def build(cls, kinds: tuple[NodeKind, ...], pairing: tuple[int, ...], free_circles: int = 0) -> Diagram:
        """Construct without validation; used by surgery, whose output is valid by construction."""
        return cls.model_construct(kinds=kinds, pairing=pairing, free_circles=free_circles)

    @classmethod
    def circles(cls, count: int) -> Diagram:
        return cls.build((), (), count)

    @property
    def n_nodes(self) -> int:
        return len(self.kinds)

    @property
    def n_darts(self) -> int:
        return len(self.pairing)

    def partner(self, h: int) -> int:
        return self.pairing[h]

    def is_crossing(self, node: int) -> bool:
        return self.kinds[node] is NodeKind.CROSSING

    def vertex_count(self) -> int:
        return sum(1 for k in self.kinds if k is NodeKind.VERTEX)

    def crossing_count(self) -> int:
        return sum(1 for k in self.kinds if k is NodeKind.CROSSING)

    def crossings(self) -> list[int]:
        return [n for n, k in enumerate(self.kinds) if k is NodeKind.CROSSING]

    def with_kind(self, node: int, kind: NodeKind) -> Diagram:
        kinds = list(self.kinds)
        kinds[node] = kind
        return Diagram.build(tuple(kinds), self.pairing, self.free_circles)

    def with_free_circles(self, count: int) -> Diagram:
        return Diagram.build(self.kinds, self.pairing, count)
