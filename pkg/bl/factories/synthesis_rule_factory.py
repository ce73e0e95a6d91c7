# Copyright (c) 2024 by Jonathan AW
# synthesis_rule_factory.py
# This file contains the SynthesisRuleFactory class, which maps every rule role onto the strategy that realizes it.
"""
Design Pattern:

1. Factory Method:
- load_rule picks the strategy for a role from a mapping of lambdas, so each call gets a fresh, stateless strategy.

2. Single Mapping:
- UCA not-provided, UCA too-late and DCA provided share the demand role; UCA provided and DCA not-provided share the forbid role. The swap happens in dal.models, so the factory only knows roles.
"""

import logging
from typing import Callable, Dict

from bl.factories.base_synthesis_rule_factory import BaseSynthesisRuleFactory
from bl.rules.applied_too_long_rule import AppliedTooLongRule
from bl.rules.base_rule import BaseSynthesisRule
from bl.rules.demand_rule import DemandRule
from bl.rules.forbid_rule import ForbidRule
from bl.rules.stopped_too_soon_rule import StoppedTooSoonRule
from bl.rules.too_early_rule import TooEarlyRule
from dal.models import RuleRole
from exceptions import SynthesisRuleNotFoundException
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)


class SynthesisRuleFactory(BaseSynthesisRuleFactory):
    """
    Factory class creating the synthesis strategy for each rule role.
    """

    def load_rule(self, role: RuleRole) -> BaseSynthesisRule:
        rules_mapping: Dict[RuleRole, Callable[[], BaseSynthesisRule]] = {
            RuleRole.DEMAND: lambda: DemandRule(),
            RuleRole.FORBID: lambda: ForbidRule(),
            RuleRole.TOO_EARLY: lambda: TooEarlyRule(),
            RuleRole.APPLIED_TOO_LONG: lambda: AppliedTooLongRule(),
            RuleRole.STOPPED_TOO_SOON: lambda: StoppedTooSoonRule(),
        }
        rule_factory = rules_mapping.get(role)
        if rule_factory is None:
            handle_error(SynthesisRuleNotFoundException(f"No synthesis rule for role '{role}'"), "Cannot load rule")
        rule = rule_factory()
        logger.debug("Loaded %s for role %s", type(rule).__name__, role)
        return rule
