"""Independent reference evaluators for cross-checking."""

from .dubrovnik import dubrovnik, link_value, switch_crossing
from .statesum import bracket_statesum, kv_statesum, marker_replacements

__all__ = [
    "bracket_statesum",
    "dubrovnik",
    "kv_statesum",
    "link_value",
    "marker_replacements",
    "switch_crossing",
]
