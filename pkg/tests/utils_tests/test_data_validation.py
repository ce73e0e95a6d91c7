# Copyright (c) 2024 by Jonathan AW

"""
Purpose: Tests for the data validation functions used before the services run. [Bounds, generator limits, identifiers, trace lines]
"""

import pytest

from dal.models import AbstractValue, ProcessModelVariable
from utils.data_validation import (validate_bound, validate_identifier, validate_random_limits,
                                   validate_trace_assignment)

SPEED = ProcessModelVariable("speed", (AbstractValue("slow"), AbstractValue("fast")))
GAP = ProcessModelVariable("gap", (AbstractValue("safe"), AbstractValue("critical")))


def test_validate_bound_valid():
    assert validate_bound(6) == (True, "All fields are valid")
    assert validate_bound(1) == (True, "All fields are valid")


@pytest.mark.parametrize("bound", [0, -3])
def test__neg_validate_bound_too_small(bound):
    is_valid, message = validate_bound(bound)
    assert not is_valid
    assert message == "Invalid value for bound: must be at least 1"


@pytest.mark.parametrize("bound", ["6", 2.5, None, True])
def test__neg_validate_bound_not_an_integer(bound):
    is_valid, message = validate_bound(bound)
    assert not is_valid
    assert message == "Invalid value for bound: must be an integer"


def test_validate_identifier():
    assert validate_identifier("lessThanDesiredSpeed")[0]
    assert validate_identifier("_x1")[0]
    assert not validate_identifier("1x")[0]
    assert not validate_identifier("a-b")[0]
    assert not validate_identifier(7)[0]


def test_validate_random_limits_valid():
    limits = {"actions": 3, "variables": 2, "values": 3, "rules": 0, "alphabet": 4}
    assert validate_random_limits(limits) == (True, "All fields are valid")


def test__neg_validate_random_limits_above_ceiling():
    is_valid, message = validate_random_limits({"rules": 7})
    assert not is_valid
    assert message == "Invalid value for rules: must be at most 6"


def test__neg_validate_random_limits_unknown_key():
    is_valid, message = validate_random_limits({"states": 2})
    assert not is_valid
    assert message == "Unknown limit: states"


def test__neg_validate_random_limits_alphabet_too_small():
    is_valid, message = validate_random_limits({"alphabet": 1})
    assert not is_valid
    assert message == "Invalid value for alphabet: must be at least 2"


def test__neg_validate_random_limits_no_actions():
    is_valid, message = validate_random_limits({"actions": 0})
    assert not is_valid
    assert message == "Invalid value for actions: must be at least 1"


def test_validate_trace_assignment_valid():
    assert validate_trace_assignment({"gap": "safe", "speed": "fast"}, [SPEED, GAP]) == (True, "All fields are valid")


def test__neg_validate_trace_assignment_unknown_variable():
    is_valid, message = validate_trace_assignment({"speed": "fast", "gap": "safe", "mode": "on"}, [SPEED, GAP])
    assert not is_valid
    assert message == "Unknown variable: mode"


def test__neg_validate_trace_assignment_missing_variable():
    is_valid, message = validate_trace_assignment({"speed": "fast"}, [SPEED, GAP])
    assert not is_valid
    assert message == "Missing variable: gap"


def test__neg_validate_trace_assignment_invalid_value():
    is_valid, message = validate_trace_assignment({"speed": "medium", "gap": "safe"}, [SPEED, GAP])
    assert not is_valid
    assert message == "Invalid value for speed: medium"
