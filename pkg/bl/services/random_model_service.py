# Copyright (c) 2024 by Jonathan AW
# random_model_service.py
# This file contains the RandomModelService class that generates small, conflict-free STPA models for property tests.

import logging
import random
from dataclasses import dataclass
from typing import List, Optional

from bl.services.validation_service import ValidationService
from config import Config
from dal.models import (AbstractValue, BooleanDomain, Bound, Context, ControlAction, DcaRule, DcaType,
                        IntervalDomain, ProcessModelVariable, SingletonDomain, StpaModel, UcaRule, UcaType)
from exceptions import InvalidStpaModelException
from utils.data_validation import validate_random_limits
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)

"""
Summary: The RandomModelService class builds seeded random models within fixed limits. Rules are added one at a time and a rule that makes validate report an ERROR is dropped, so every generated model is synthesizable.

Design Patterns:
1. Determinism:
- All randomness comes from random.Random(seed); the same seed and limits always yield the same model.

2. Data Validation:
- Limits are checked with validate_random_limits before generation.
"""


@dataclass(frozen=True)
class RandomModelLimits:
    actions: int = 3
    variables: int = 3
    values: int = 3
    rules: int = 6
    alphabet: int = Config.RANDOM_MAX_ALPHABET

    def as_dict(self):
        return {"actions": self.actions, "variables": self.variables, "values": self.values,
                "rules": self.rules, "alphabet": self.alphabet}


class RandomModelService:
    """
    Service class generating random valid StpaModels.
    """

    def __init__(self, validation_service: Optional[ValidationService] = None):
        self.validation_service = validation_service or ValidationService()

    def generate(self, seed: int, limits: Optional[RandomModelLimits] = None) -> StpaModel:
        limits = limits or RandomModelLimits()
        is_valid, message = validate_random_limits(limits.as_dict())
        if not is_valid:
            handle_error(InvalidStpaModelException(message), "Cannot generate a random model")
        rng = random.Random(seed)
        variables = self._variables(rng, limits)
        actions = tuple(ControlAction(f"a{index}") for index in range(rng.randint(1, limits.actions)))
        model = StpaModel(f"random{seed}", variables, actions)

        attempts = 0
        next_rule = 0
        while len(model.rules) < limits.rules and attempts < 4 * limits.rules:
            attempts += 1
            candidate = self._add_rule(rng, model, f"r{next_rule}")
            if self.validation_service.has_errors(self.validation_service.validate(candidate)):
                continue
            model = candidate
            next_rule += 1
        logger.debug("Random model %d: %d variables, %d actions, %d rules", seed, len(variables), len(actions),
                     len(model.rules))
        return model

    @staticmethod
    def _variables(rng: random.Random, limits: RandomModelLimits) -> tuple:
        variables: List[ProcessModelVariable] = []
        alphabet = 1
        for index in range(rng.randint(1, limits.variables)):
            size = 2 if rng.random() < 0.5 else rng.randint(2, limits.values)
            if alphabet * size > limits.alphabet:
                size = 2
                if alphabet * size > limits.alphabet:
                    break
            alphabet *= size
            name = f"x{index}"
            style = rng.choice(("boolean", "enum", "range")) if size == 2 else rng.choice(("enum", "range"))
            if style == "boolean":
                values = (AbstractValue("true", BooleanDomain(True)), AbstractValue("false", BooleanDomain(False)))
            elif style == "range":
                threshold = Bound.reference(f"limit{index}")
                if size == 2:
                    values = (AbstractValue("low", IntervalDomain(Bound.minimum(), True, threshold, False)),
                              AbstractValue("high", IntervalDomain(threshold, True, Bound.maximum(), True)))
                else:
                    values = (AbstractValue("low", IntervalDomain(Bound.minimum(), True, threshold, False)),
                              AbstractValue("at", SingletonDomain(threshold)),
                              AbstractValue("high", IntervalDomain(threshold, False, Bound.maximum(), True)))
            else:
                values = tuple(AbstractValue(f"v{value}") for value in range(size))
            variables.append(ProcessModelVariable(name, values))
        return tuple(variables)

    @staticmethod
    def _context(rng: random.Random, model: StpaModel, name: str) -> Context:
        chosen = [variable for variable in model.process_model if rng.random() < 0.6]
        if not chosen:
            chosen = [rng.choice(model.process_model)]
        return Context(name, tuple((variable.name, rng.choice(variable.value_names)) for variable in chosen))

    def _add_rule(self, rng: random.Random, model: StpaModel, rule_id: str) -> StpaModel:
        action = rng.choice(model.action_names)
        contexts = tuple(self._context(rng, model, f"c{index}") for index in range(1 if rng.random() < 0.8 else 2))
        if rng.random() < 0.2:
            rule = DcaRule(rule_id, action, rng.choice(list(DcaType)), contexts)
            return StpaModel(model.controller, model.process_model, model.control_actions, model.ucas,
                             model.dcas + (rule,))
        rule = UcaRule(rule_id, action, rng.choice(list(UcaType)), contexts)
        return StpaModel(model.controller, model.process_model, model.control_actions, model.ucas + (rule,),
                         model.dcas)


def generate_random_model(seed: int, limits: Optional[RandomModelLimits] = None) -> StpaModel:
    return RandomModelService().generate(seed, limits)
