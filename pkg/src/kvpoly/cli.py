"""Command-line front end."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence

from .calculus.embedded import EmbeddedEvaluator, planarity_obstruction
from .config import LOG_LEVELS, Settings, load_settings
from .errors import DepthExceeded, DiagramError
from .models.diagram import Diagram
from .models.verdict import PlanarityStatus
from .oracle.statesum import kv_statesum
from .properties import run_all
from .ring import Specialization, specialize
from .topology.codec import load, serialize
from .topology.generate import random_diagram
from .topology.structure import twist_number

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_DEPTH = 3

SPECS = {
    "generic": None,
    "planar-test": Specialization.PLANAR_TEST,
    "bracket": Specialization.BRACKET,
    "yamada": Specialization.YAMADA,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kvpoly", description="Kauffman-Vogel polynomial of rigid-vertex graphs")
    parser.add_argument(
        "--log-level",
        choices=list(LOG_LEVELS),
        default=os.getenv("LOG_LEVEL", "WARNING"),
        help="Set the logging level (default: WARNING, env: LOG_LEVEL)",
    )
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (env: KVPOLY_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="Print the polynomial of a diagram")
    p_eval.add_argument("file")
    p_eval.add_argument("--spec", choices=list(SPECS), default="generic")

    p_twist = sub.add_parser("twist", help="Print the twisting number")
    p_twist.add_argument("file")

    p_check = sub.add_parser("check-planar", help="Run the planarity obstruction")
    p_check.add_argument("file")

    p_oracle = sub.add_parser("oracle", help="Compare the evaluator with the marker state sum")
    p_oracle.add_argument("file")

    p_self = sub.add_parser("selftest", help="Run the randomized property corpus")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--size", type=int, default=50)

    p_random = sub.add_parser("random", help="Print a random diagram")
    p_random.add_argument("--vertices", type=int, default=3)
    p_random.add_argument("--crossings", type=int, default=2)
    p_random.add_argument("--seed", type=int, default=0)

    sub.add_parser("serve", help="Run the MCP server over stdio")
    return parser


def _evaluator(settings: Settings) -> EmbeddedEvaluator:
    return EmbeddedEvaluator.from_settings(settings)


def _cmd_eval(d: Diagram, args: argparse.Namespace, settings: Settings) -> int:
    value = _evaluator(settings).evaluate(d)
    spec = SPECS[args.spec]
    print(value.render() if spec is None else specialize(value, spec).render())
    return EXIT_OK


def _cmd_check(d: Diagram, settings: Settings) -> int:
    verdict = planarity_obstruction(d, _evaluator(settings))
    print(verdict.status.value)
    if verdict.status is PlanarityStatus.NOT_PLANAR:
        print(f"computed: {verdict.computed}")
        print(f"expected: {verdict.expected}")
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_oracle(d: Diagram, settings: Settings) -> int:
    expected = kv_statesum(
        d, max_vertices=settings.statesum_max_vertices, max_crossings=settings.statesum_max_crossings
    )
    agree = _evaluator(settings).evaluate(d) == expected
    print("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_NEGATIVE


def _cmd_selftest(args: argparse.Namespace, settings: Settings) -> int:
    results = run_all(seed=args.seed, size=args.size, settings=settings)
    for result in results:
        print(result.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_NEGATIVE


def _cmd_serve(log_level: int) -> int:
    from .server import create_server

    create_server(log_level=log_level).run()
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    args = build_parser().parse_args(argv)
    log_level = getattr(logging, args.log_level.upper())
    logging.basicConfig(level=log_level)

    try:
        settings = load_settings(log_level=args.log_level, threads=args.threads)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE

    if args.command == "selftest":
        return _cmd_selftest(args, settings)
    if args.command == "random":
        print(serialize(random_diagram(args.vertices, args.crossings, args.seed)), end="")
        return EXIT_OK
    if args.command == "serve":
        return _cmd_serve(log_level)

    try:
        d = load(args.file)
    except (DiagramError, OSError) as e:
        print(f"{args.file}: {e}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "eval":
            return _cmd_eval(d, args, settings)
        if args.command == "twist":
            print(twist_number(d))
            return EXIT_OK
        if args.command == "check-planar":
            return _cmd_check(d, settings)
        return _cmd_oracle(d, settings)
    except DepthExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEPTH
