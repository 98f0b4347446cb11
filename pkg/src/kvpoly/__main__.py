"""Entry point for the kvpoly command line."""

from typing import NoReturn

from .cli import run


def main() -> NoReturn:
    """Run the command line and exit with its code."""
    raise SystemExit(run())


if __name__ == "__main__":
    main()
