"""FastMCP server exposing the kvpoly evaluators."""

from __future__ import annotations

import logging

from mcp.server.fastmcp import FastMCP

from .calculus.rules import rule_table_text
from .tools import diagram_tools

logger = logging.getLogger(__name__)


def create_server(*, log_level: int = logging.WARNING) -> FastMCP:
    """Create and configure the FastMCP server.

    Args:
        log_level: The logging level to use. Defaults to WARNING.

    Returns:
        Configured FastMCP server instance.
    """
    logging.basicConfig(level=log_level)
    logger.setLevel(log_level)

    mcp = FastMCP("kvpoly")

    @mcp.resource("rules://table")
    def get_rule_table() -> str:
        """The rule table of the planar graph calculus, as JSON."""
        return rule_table_text()

    mcp.tool(
        name="evaluate_diagram",
        description="Evaluate the Kauffman-Vogel polynomial of a .kvg diagram, optionally specialized.",
    )(diagram_tools.evaluate_diagram)
    mcp.tool(
        name="twisting_number",
        description="Compute the twisting number t(G) of a .kvg diagram.",
    )(diagram_tools.twisting_number)
    mcp.tool(
        name="check_planarity",
        description="Run the planarity obstruction on a .kvg diagram.",
    )(diagram_tools.check_planarity)
    mcp.tool(
        name="compare_with_oracle",
        description="Cross-check the evaluator against the marker state sum on a small diagram.",
    )(diagram_tools.compare_with_oracle)
    mcp.tool(
        name="random_diagram",
        description="Generate a random valid diagram with given numbers of vertices and crossings.",
    )(diagram_tools.random_diagram)

    logger.debug("kvpoly server created")
    return mcp
