#!/usr/bin/env python3
"""Command-line entry point for the relative commutant toolkit."""

import argparse
import sys
from typing import Any, Dict, List, Optional

from config.logging_setup import get_logger, setup_logging
from config.settings import __version__, config
from tools.registry import ToolRegistry
from utils.formatting import format_report, to_json

logger = get_logger(__name__)

USAGE_ERROR = 2

_TYPES = {"string": str, "number": float, "integer": int}


def build_parser(registry: ToolRegistry) -> argparse.ArgumentParser:
    """One subcommand per registered tool, with flags taken from the tool schema."""
    parser = argparse.ArgumentParser(
        prog="relcommutant",
        description="Relative tube algebras, their block decomposition and relative Drinfeld commutants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Logging level (default: LOG_LEVEL or WARNING)")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    for name, tool in registry.tools.items():
        sub = subparsers.add_parser(name, help=tool.description, description=tool.description)
        schema = tool.get_schema()
        required = set(schema.get("required", []))
        for field, spec in schema.get("properties", {}).items():
            flag = "--" + field.replace("_", "-")
            kwargs: Dict[str, Any] = {"dest": field, "help": spec.get("description")}
            if spec.get("type") == "boolean":
                kwargs["action"] = "store_true"
                kwargs["default"] = None
            else:
                kwargs["type"] = _TYPES[spec.get("type", "string")]
                if "enum" in spec:
                    kwargs["choices"] = spec["enum"]
                if "default" in spec:
                    kwargs["default"] = spec["default"]
                if field in required:
                    kwargs["required"] = True
            sub.add_argument(flag, **kwargs)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the subcommand, print its report to stdout and return the exit code."""
    registry = ToolRegistry().register_all()
    parser = build_parser(registry)
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit 0; anything else is a usage error
        return 0 if e.code in (0, None) else USAGE_ERROR

    setup_logging(namespace.log_level or "")
    logger.debug(f"Configuration: {config.get_config_summary()}")
    arguments = {key: value for key, value in vars(namespace).items() if key not in ("command", "log_level")}
    result = registry.execute_tool(namespace.command, arguments)

    if arguments.get("format") == "text":
        sys.stdout.write(format_report(result.report))
    else:
        sys.stdout.write(to_json(result.report) + "\n")
    sys.stdout.flush()
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
