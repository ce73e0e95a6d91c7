# Copyright (c) 2024 by Jonathan AW
# cli/__init__.py

"""
Command-line surface of the toolchain (`sbm`).

Design Patterns:
1. Command Registration:
- Each subcommand lives in its own module under cli/commands and registers its parser and handler, the way routes register themselves with an application.

2. Centralized Error Mapping:
- Handlers raise; main turns exceptions into exit codes. ERROR diagnostics and verification violations exit 1, unreadable or malformed input exits 2. Messages go to stderr, results to stdout.
"""

import argparse
import logging
import sys
from typing import List, Optional

from cli.commands import common, ltl, simulate, synth, validate, verify
from config import get_config
from exceptions import (InvalidBoundException, InvalidStatechartDataException, ModelValidationException,
                        StpaParseException, TraceFileException)

COMMANDS = (validate, ltl, synth, verify, simulate)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbm", description="Synthesize safe behavior models from STPA results")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def setup_logging(verbose: bool) -> None:
    config = get_config()
    logging.basicConfig(level=logging.DEBUG if verbose else config.LOG_LEVEL, format=config.LOG_FORMAT,
                        stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else common.EXIT_USAGE
    setup_logging(args.verbose)

    try:
        return args.handler(args)
    except ModelValidationException as e:
        for diagnostic in e.diagnostics:
            common.error(str(diagnostic))
        return common.EXIT_FAILED
    except StpaParseException:
        # already reported with source snippets by load_model
        return common.EXIT_USAGE
    except (InvalidStatechartDataException, TraceFileException, InvalidBoundException) as e:
        common.error(f"error: {e}")
        return common.EXIT_USAGE
    except (OSError, UnicodeDecodeError) as e:
        common.error(f"error: {e}")
        return common.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
