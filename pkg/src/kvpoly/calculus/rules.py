"""The rule table of the planar graphical calculus.

The table ships as ``data/rule_table.json``: for each local configuration, the
weighted list of replacement pictures over its numbered legs. It is validated
with a JSON schema when loaded.
"""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import UnknownConstant
from ..ring import RingElem, parse_weight

logger = logging.getLogger(__name__)

RULE_TABLE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["version", "identities"],
    "properties": {
        "version": {"type": "integer", "minimum": 1},
        "legs_convention": {"type": "string"},
        "identities": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "legs", "children"],
                "properties": {
                    "id": {"type": "string", "enum": ["free_circle", "monogon", "bigon", "triangle"]},
                    "description": {"type": "string"},
                    "legs": {"type": "integer", "minimum": 0, "maximum": 6},
                    "children": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "type": "object",
                            "required": ["weight", "arcs", "vertices"],
                            "properties": {
                                "weight": {"type": "string", "minLength": 1},
                                "arcs": {
                                    "type": "array",
                                    "items": {
                                        "type": "array",
                                        "items": {"type": "integer", "minimum": 1},
                                        "minItems": 2,
                                        "maxItems": 2,
                                    },
                                },
                                "vertices": {
                                    "type": "array",
                                    "maxItems": 1,
                                    "items": {
                                        "type": "array",
                                        "items": {"type": "integer", "minimum": 1},
                                        "minItems": 4,
                                        "maxItems": 4,
                                    },
                                },
                                "flip": {"type": "boolean"},
                            },
                            "additionalProperties": False,
                        },
                    },
                },
            },
        },
    },
}


class RuleChild(BaseModel):
    """One weighted replacement picture."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weight: RingElem
    weight_text: str = Field(..., description="Weight as written in the table")
    arcs: tuple[tuple[int, int], ...] = Field(default=(), description="Pairs of legs joined directly")
    vertices: tuple[tuple[int, int, int, int], ...] = Field(default=(), description="New vertices, legs counterclockwise")
    flip: bool = Field(default=False, description="Replace the triangle by its flip")


class Identity(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    description: str = ""
    legs: int
    children: tuple[RuleChild, ...]

    @field_validator("children")
    @classmethod
    def validate_children(cls, children: tuple[RuleChild, ...]) -> tuple[RuleChild, ...]:
        if not children:
            raise ValueError("an identity needs at least one child")
        return children

    def check_legs(self) -> None:
        """Every non-flip child must use each leg exactly once."""
        for child in self.children:
            if child.flip:
                continue
            used = sorted([leg for arc in child.arcs for leg in arc] + [leg for v in child.vertices for leg in v])
            if used != list(range(1, self.legs + 1)):
                raise ValueError(f"identity {self.id}: child {child.weight_text!r} does not use each leg once")


class RuleTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    version: int
    identities: dict[str, Identity]

    def __getitem__(self, key: str) -> Identity:
        return self.identities[key]


def build_rule_table(raw: dict[str, Any]) -> RuleTable:
    """Validate a decoded rule table and parse its weights."""
    try:
        jsonschema.validate(instance=raw, schema=RULE_TABLE_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ValueError(f"Invalid rule table: {e.message}") from e

    identities: dict[str, Identity] = {}
    for entry in raw["identities"]:
        children = []
        for child in entry["children"]:
            try:
                weight = parse_weight(child["weight"])
            except (ValueError, UnknownConstant) as e:
                raise ValueError(f"Invalid weight {child['weight']!r} in {entry['id']}: {e}") from e
            children.append(
                RuleChild(
                    weight=weight,
                    weight_text=child["weight"],
                    arcs=tuple(tuple(a) for a in child["arcs"]),
                    vertices=tuple(tuple(v) for v in child["vertices"]),
                    flip=child.get("flip", False),
                )
            )
        identity = Identity(
            id=entry["id"], description=entry.get("description", ""), legs=entry["legs"], children=tuple(children)
        )
        identity.check_legs()
        identities[identity.id] = identity
    logger.debug(f"loaded rule table with identities {sorted(identities)}")
    return RuleTable(version=raw["version"], identities=identities)


def load_rule_table(path: str | Path | None = None) -> RuleTable:
    """Load a rule table file, by default the one shipped with the package."""
    if path is None:
        return default_rule_table()
    return build_rule_table(json.loads(Path(path).read_text(encoding="utf-8")))


@lru_cache(maxsize=1)
def default_rule_table() -> RuleTable:
    return build_rule_table(json.loads(rule_table_text()))


def rule_table_text() -> str:
    """Raw text of the shipped rule table."""
    return resources.files("kvpoly.calculus").joinpath("data/rule_table.json").read_text(encoding="utf-8")
