# Copyright (c) 2024 by Jonathan AW

"""
Purpose: Utility functions for validating data before processing in the Business Logic Layer (BL) services.

Design Pattern: Data Validation
- Each function validates one kind of input (verification bound, generator limits, identifiers, simulation traces) and returns (is_valid, message); the caller raises the matching exception.
"""

import re
from typing import Any, Dict, Sequence, Tuple

IDENTIFIER_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def validate_bound(bound: Any) -> Tuple[bool, str]:
    """
    The verification bound K counts prefix plus loop letters and must be a positive integer.
    """
    if isinstance(bound, bool) or not isinstance(bound, int):
        return False, "Invalid value for bound: must be an integer"
    if bound < 1:
        return False, "Invalid value for bound: must be at least 1"
    return True, "All fields are valid"


def validate_identifier(name: Any) -> Tuple[bool, str]:
    if not isinstance(name, str) or not IDENTIFIER_PATTERN.match(name):
        return False, f"Invalid identifier: {name!r}"
    return True, "All fields are valid"


def validate_random_limits(limits: Dict[str, int]) -> Tuple[bool, str]:
    """
    Limits for generated models: at most 3 actions, 3 variables, 3 values per variable and 6 rules.
    """
    ceilings = {"actions": 3, "variables": 3, "values": 3, "rules": 6}
    for key, value in limits.items():
        if key not in ceilings and key != "alphabet":
            return False, f"Unknown limit: {key}"
        if isinstance(value, bool) or not isinstance(value, int):
            return False, f"Invalid value for {key}: must be an integer"
        if key in ("actions", "variables") and value < 1:
            return False, f"Invalid value for {key}: must be at least 1"
        if key in ("values", "alphabet") and value < 2:
            return False, f"Invalid value for {key}: must be at least 2"
        if key in ceilings and value > ceilings[key]:
            return False, f"Invalid value for {key}: must be at most {ceilings[key]}"
        if key == "rules" and value < 0:
            return False, "Invalid value for rules: must be non-negative"
    return True, "All fields are valid"


def validate_trace_assignment(assignment: Dict[str, str], variables: Sequence[Any]) -> Tuple[bool, str]:
    """
    A simulation trace line must assign every process-model variable one of its declared values.
    """
    names = [variable.name for variable in variables]
    for name in assignment:
        if name not in names:
            return False, f"Unknown variable: {name}"
    for variable in variables:
        if variable.name not in assignment:
            return False, f"Missing variable: {variable.name}"
        if assignment[variable.name] not in variable.value_names:
            return False, f"Invalid value for {variable.name}: {assignment[variable.name]}"
    return True, "All fields are valid"
