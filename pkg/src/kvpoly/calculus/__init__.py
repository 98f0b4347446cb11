"""Evaluation of the polynomial: planar calculus and skein expansion."""

from .embedded import EmbeddedEvaluator, evaluate, normalized, planarity_obstruction, specialized_eval
from .planar import MemoCache, apply_identity, eval_planar, eval_planar_closed_form, find_reducible
from .rules import RuleTable, default_rule_table, load_rule_table

__all__ = [
    "EmbeddedEvaluator",
    "MemoCache",
    "RuleTable",
    "apply_identity",
    "default_rule_table",
    "eval_planar",
    "eval_planar_closed_form",
    "evaluate",
    "find_reducible",
    "load_rule_table",
    "normalized",
    "planarity_obstruction",
    "specialized_eval",
]
