# Copyright (c) 2024 by Jonathan AW
# forbid_rule.py
# Summary: Realizes UCA provided and DCA not-provided: the action's state falls back to s0 while the context holds.

import logging

from bl.rules.base_rule import BaseSynthesisRule, RuleApplication, RuleResult, add_transition, covered_by
from dal.statechart_models import Guard, Statechart, Transition, TransitionKind

logger = logging.getLogger(__name__)


class ForbidRule(BaseSynthesisRule):
    """
    Adds s_action -> s0 on the context, minus the valuations on which s_action already leaves.
    Adds nothing when the remainder is empty.
    """

    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        source = statechart.base_state_id(application.instance.action)
        remainder = application.valuations - covered_by(statechart.outgoing(source))
        if not remainder:
            logger.debug("Forbid %s already covered by outgoing transitions of %s", application.label, source)
            return RuleResult(statechart)
        transition = Transition(source, statechart.initial, Guard(remainder), TransitionKind.FORBID,
                                provenance=(application.label,))
        return RuleResult(add_transition(statechart, transition))
