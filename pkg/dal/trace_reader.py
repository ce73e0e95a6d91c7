# Copyright (c) 2024 by Jonathan AW
# trace_reader.py
# Summary: Reads simulation input traces: one valuation per line as comma-separated var=value pairs, with an optional "loop:" line.

import logging
from typing import List, Sequence

from bl.ltl.evaluator import Lasso
from dal.models import ContextValuation, ProcessModelVariable
from exceptions import TraceFileException
from utils.data_validation import validate_trace_assignment
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)

LOOP_MARKER = "loop:"


def _read_valuation(line: str, number: int, variables: Sequence[ProcessModelVariable]) -> ContextValuation:
    assignment = {}
    for pair in line.split(","):
        name, separator, value = pair.partition("=")
        name, value = name.strip(), value.strip()
        if not separator or not name or not value:
            handle_error(TraceFileException(f"line {number}: expected var=value, got {pair.strip()!r}"),
                         "Cannot read trace")
        if name in assignment:
            handle_error(TraceFileException(f"line {number}: {name} assigned twice"), "Cannot read trace")
        assignment[name] = value
    is_valid, message = validate_trace_assignment(assignment, variables)
    if not is_valid:
        handle_error(TraceFileException(f"line {number}: {message}"), "Cannot read trace")
    return ContextValuation(tuple((variable.name, assignment[variable.name]) for variable in variables))


def read_trace(text: str, variables: Sequence[ProcessModelVariable]) -> Lasso:
    """
    Lines before "loop:" form the prefix and lines after it the loop. Without the marker the last valuation
    repeats forever. Blank lines and lines starting with # are skipped.
    """
    prefix: List[ContextValuation] = []
    loop: List[ContextValuation] = []
    in_loop = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == LOOP_MARKER:
            if in_loop:
                handle_error(TraceFileException(f"line {number}: second {LOOP_MARKER} marker"), "Cannot read trace")
            in_loop = True
            continue
        (loop if in_loop else prefix).append(_read_valuation(line, number, variables))

    if in_loop and not loop:
        handle_error(TraceFileException(f"{LOOP_MARKER} marker is not followed by any valuation"), "Cannot read trace")
    if not in_loop:
        if not prefix:
            handle_error(TraceFileException("trace contains no valuations"), "Cannot read trace")
        prefix, loop = prefix[:-1], prefix[-1:]
    logger.debug("Read trace with prefix %d and loop %d", len(prefix), len(loop))
    return Lasso(tuple(prefix), tuple(loop))
