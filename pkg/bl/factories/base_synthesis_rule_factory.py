# Copyright (c) 2024 by Jonathan AW
# base_synthesis_rule_factory.py
# Summary: The BaseSynthesisRuleFactory class defines an abstract factory for the synthesis rule strategies. Concrete factories decide which strategy realizes each rule role.
"""
Design Pattern: Abstract Factory

1. Use of Abstract Base Class (ABC):
- Concrete subclasses must implement load_rule. The synthesis service only depends on this interface, so tests can inject a factory returning spies or alternative strategies.

2. Type Annotations:
- Arguments and return types are annotated.
"""

from abc import ABC, abstractmethod

from bl.rules.base_rule import BaseSynthesisRule
from dal.models import RuleRole


class BaseSynthesisRuleFactory(ABC):
    """
    Abstract Base Factory class to create the synthesis rule for a rule role.
    """

    @abstractmethod
    def load_rule(self, role: RuleRole) -> BaseSynthesisRule:
        """
        Instantiate the strategy that realizes rule instances of the given role.

        Args:
            role (RuleRole): What the rule instance asks of the machine (demand, forbid, ...).

        Returns:
            BaseSynthesisRule: The strategy to apply.
        """
        pass
