# Copyright (c) 2024 by Jonathan AW
# common.py
# Summary: Helpers shared by the subcommands: reading input files and printing models, diagnostics and traces.

import sys
from pathlib import Path

from bl.ltl.evaluator import Reaction
from dal.models import StpaModel
from dal.statechart_models import NO_ACTION
from dal.stpa_parser import decode_source, format_diagnostics, parse_stpa
from exceptions import StpaParseException

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_model(path: str) -> StpaModel:
    """
    Parse an .stpa file. Parse errors are reported on stderr with source snippets before the exception
    propagates to main.
    """
    data = Path(path).read_bytes()
    try:
        return parse_stpa(decode_source(data))
    except StpaParseException as e:
        text = data.decode("utf-8", errors="replace")
        sys.stderr.write(f"{path}:\n" + format_diagnostics(e.errors, text))
        raise


def error(message: str) -> None:
    print(message, file=sys.stderr)


def format_reaction(index: int, reaction: Reaction) -> str:
    valuation = ", ".join(f"{name}={value}" for name, value in reaction.valuation.items)
    return f"{index:>3}  {reaction.state or '-':<24} {reaction.sent or NO_ACTION:<16} [{valuation}]"


def format_trace(trace) -> str:
    lines = [format_reaction(index, reaction) for index, reaction in enumerate(trace.prefix)]
    lines.append("     loop:")
    offset = len(trace.prefix)
    lines += [format_reaction(offset + index, reaction) for index, reaction in enumerate(trace.loop)]
    return "\n".join(lines)
