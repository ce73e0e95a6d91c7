# Copyright (c) 2024 by Jonathan AW
# too_early_rule.py
# Summary: too-early formulas are generated but cannot be realized, since the machine would have to know the next valuation in advance. The rule only leaves a note.

import logging

from bl.rules.base_rule import BaseSynthesisRule, RuleApplication, RuleResult
from dal.statechart_models import Note, Statechart

logger = logging.getLogger(__name__)


class TooEarlyRule(BaseSynthesisRule):

    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        instance = application.instance
        logger.warning("Too-early rule %s is not realized by the synthesized machine", application.label)
        note = Note(instance.rule_id, instance.action, instance.context.name,
                    f"too-early formula for '{instance.action}' in context {instance.context.name} is generated "
                    f"but not realized; it would require knowing the next reaction in advance")
        return RuleResult(statechart, (note,))
