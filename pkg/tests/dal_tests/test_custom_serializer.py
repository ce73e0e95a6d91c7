# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of the .sbm.json reader and writer:

Objective: A written statechart reads back equal, and malformed or inconsistent documents are refused with InvalidStatechartDataException.
"""
# test_custom_serializer.py

import json

import pytest

from bl.services.random_model_service import generate_random_model
from dal.custom_serializer import emit_json, formulas_to_json, parse_json, verdict_to_json
from exceptions import InvalidStatechartDataException


@pytest.fixture(scope="function")
def acc_document(acc_result):
    yield json.loads(emit_json(acc_result.statechart, acc_result.formulas))


# Positive Test Cases

def test_json_round_trip_acc(acc_result):
    statechart, formulas = parse_json(emit_json(acc_result.statechart, acc_result.formulas))
    assert statechart == acc_result.statechart
    assert formulas == acc_result.formulas


def test_json_round_trip_without_transitions(synthesis_service, build_model):
    result = synthesis_service.synthesize(build_model())
    statechart, formulas = parse_json(emit_json(result.statechart))
    assert statechart == result.statechart
    assert formulas == ()


def test_json_round_trip_random_models(synthesis_service):
    for seed in range(200):
        result = synthesis_service.synthesize(generate_random_model(seed))
        statechart, formulas = parse_json(emit_json(result.statechart, result.formulas))
        assert statechart == result.statechart, seed
        assert formulas == result.formulas, seed


def test_guard_key_order_is_free(acc_result, acc_document):
    for transition in acc_document["statechart"]["transitions"]:
        transition["guard"] = [dict(reversed(list(valuation.items()))) for valuation in transition["guard"]]
    guards = [valuation for transition in acc_document["statechart"]["transitions"]
              for valuation in transition["guard"]]
    assert guards and all(list(valuation) == ["timeGap", "speed"] for valuation in guards)
    statechart, _ = parse_json(json.dumps(acc_document))
    assert statechart == acc_result.statechart
    assert statechart.is_deterministic()


def test_json_layout(acc_document):
    assert acc_document["format"] == "sbm/1"
    chart = acc_document["statechart"]
    assert [state["id"] for state in chart["states"]] == [
        "s0", "s_stop", "s_accelerate_belowDesired", "s_decelerate_aboveDesired"]
    assert chart["variables"][0]["values"][0]["domain"] == {
        "kind": "singleton", "bound": {"kind": "reference", "text": "desiredSpeed"}}
    assert chart["inputs"] == ["desiredSpeed", "minTimeGap"]
    escape = next(t for t in chart["transitions"] if t["kind"] == "escape")
    assert escape["guard"] == [{"speed": "desiredSpeed", "timeGap": "safe"}]
    first = acc_document["formulas"][0]
    assert first["instance"]["kind"] == "not-provided"
    assert first["formula"]["op"] == "and"


def test_formulas_to_json(acc_result):
    report = json.loads(formulas_to_json(acc_result.formulas))
    assert len(report) == 12
    assert report[1] == {
        "rule_id": "UCA1", "source": "UCA", "kind": "not-provided", "action": "stop", "context": "cruiseCritical",
        "formula": acc_result.formulas[1][1].render()}


def test_verdict_to_json(acc_result, verification_service):
    verdict = verification_service.check(acc_result.statechart, acc_result.formulas, 2)
    report = json.loads(verdict_to_json(acc_result.statechart, verdict))
    assert report["controller"] == "ACC"
    assert report["bound"] == 2
    assert report["lasso_count"] == 6 + 36 * 2
    assert len(report["results"]) == 12
    assert {result["status"] for result in report["results"]} <= {"holds", "violated", "not-guaranteed"}


# Negative Test Cases

def test__neg_malformed_json():
    with pytest.raises(InvalidStatechartDataException):
        parse_json("{not json")
    with pytest.raises(InvalidStatechartDataException):
        parse_json("[]")


def test__neg_unknown_field(acc_document):
    acc_document["statechart"]["color"] = "blue"
    with pytest.raises(InvalidStatechartDataException):
        parse_json(json.dumps(acc_document))


def test__neg_wrong_format(acc_document):
    acc_document["format"] = "sbm/0"
    with pytest.raises(InvalidStatechartDataException):
        parse_json(json.dumps(acc_document))


def test__neg_unknown_transition_kind(acc_document):
    acc_document["statechart"]["transitions"][0]["kind"] = "teleport"
    with pytest.raises(InvalidStatechartDataException):
        parse_json(json.dumps(acc_document))


def test__neg_dangling_state(acc_document):
    acc_document["statechart"]["transitions"][0]["target"] = "s_missing"
    with pytest.raises(InvalidStatechartDataException, match="unknown state s_missing"):
        parse_json(json.dumps(acc_document))


def test__neg_guard_outside_alphabet(acc_document):
    acc_document["statechart"]["transitions"][0]["guard"] = [{"speed": "fast", "timeGap": "safe"}]
    with pytest.raises(InvalidStatechartDataException, match="valuation alphabet"):
        parse_json(json.dumps(acc_document))


def test__neg_unknown_action(acc_document):
    acc_document["statechart"]["states"][1]["emits"] = "honk"
    with pytest.raises(InvalidStatechartDataException, match="unknown action honk"):
        parse_json(json.dumps(acc_document))


def test__neg_formula_arity(acc_document):
    acc_document["formulas"][0]["formula"] = {"op": "and", "left": {"op": "true"}}
    with pytest.raises(InvalidStatechartDataException):
        parse_json(json.dumps(acc_document))


@pytest.mark.parametrize("path, bad", [
    (("states", 1, "id"), "s stop"),
    (("actions", 0), "stop!"),
    (("variables", 0, "name"), "1speed"),
    (("transitions", 0, "source"), ""),
])
def test__neg_names_must_be_identifiers(acc_document, path, bad):
    node = acc_document["statechart"]
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] = bad
    with pytest.raises(InvalidStatechartDataException, match="Invalid identifier"):
        parse_json(json.dumps(acc_document))
