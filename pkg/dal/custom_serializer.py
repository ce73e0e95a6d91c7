# Copyright (c) 2024 by Jonathan AW
# custom_serializer.py
# Summary: JSON reading and writing of synthesized statecharts (.sbm.json), formula lists and verification reports.

import json
import logging
from typing import Sequence, Tuple

from marshmallow import ValidationError

from bl.ltl.formulas import LtlFormula
from dal.models import RuleInstance
from dal.schemas.all_schemas import (DOCUMENT_FORMAT, FormulaReportSchema, SbmDocumentSchema,
                                     VerificationReportSchema)
from dal.statechart_models import Statechart
from exceptions import InvalidStatechartDataException, InvalidStpaModelException
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)

Formulas = Tuple[Tuple[RuleInstance, LtlFormula], ...]


def emit_json(statechart: Statechart, formulas: Sequence[Tuple[RuleInstance, LtlFormula]] = ()) -> str:
    """
    Serialize a statechart and its formulas. Guards are written as the full list of valuations enabling them,
    so parse_json restores exactly the same machine.
    """
    document = {"format": DOCUMENT_FORMAT, "statechart": statechart, "formulas": list(formulas)}
    return json.dumps(SbmDocumentSchema().dump(document), indent=2) + "\n"


def parse_json(text: str) -> Tuple[Statechart, Formulas]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        handle_error(InvalidStatechartDataException(f"Malformed JSON: {e}"), "Cannot read statechart")
    if not isinstance(data, dict):
        handle_error(InvalidStatechartDataException("Top-level JSON value must be an object"), "Cannot read statechart")
    try:
        statechart, formulas = SbmDocumentSchema().load(data)
    except ValidationError as e:
        handle_error(InvalidStatechartDataException(f"Schema violation: {e.messages}"), "Cannot read statechart")
    except InvalidStpaModelException as e:
        handle_error(InvalidStatechartDataException(f"Invalid variable declaration: {e}"), "Cannot read statechart")
    check_statechart(statechart)
    logger.debug("Read statechart %s with %d states", statechart.name, len(statechart.states))
    return statechart, formulas


def check_statechart(statechart: Statechart) -> None:
    """
    Cross-field checks the schemas cannot express: known states and actions, unique ids, guards inside the
    valuation alphabet.
    """
    problems = []
    ids = statechart.state_ids
    if len(set(ids)) != len(ids):
        problems.append("duplicate state id")
    if not statechart.has_state(statechart.initial):
        problems.append(f"initial state {statechart.initial} is not declared")
    for state in statechart.states:
        if state.emits is not None and state.emits not in statechart.actions:
            problems.append(f"state {state.id} emits unknown action {state.emits}")
    alphabet = set(statechart.alphabet())
    for transition in statechart.transitions:
        for end in (transition.source, transition.target):
            if not statechart.has_state(end):
                problems.append(f"transition refers to unknown state {end}")
        if not transition.guard.valuations <= alphabet:
            problems.append(f"guard of {transition.source} -> {transition.target} leaves the valuation alphabet")
    if problems:
        handle_error(InvalidStatechartDataException("; ".join(problems)), "Cannot read statechart")


def formulas_to_json(formulas: Sequence[Tuple[RuleInstance, LtlFormula]]) -> str:
    return json.dumps(FormulaReportSchema(many=True).dump(list(formulas)), indent=2) + "\n"


def verdict_to_json(statechart: Statechart, verdict) -> str:
    report = {"controller": statechart.name, "bound": verdict.bound, "alphabet_size": verdict.alphabet_size,
              "lasso_count": verdict.lasso_count, "passed": verdict.passed, "results": list(verdict.results)}
    return json.dumps(VerificationReportSchema().dump(report), indent=2) + "\n"
