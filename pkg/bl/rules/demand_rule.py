# Copyright (c) 2024 by Jonathan AW
# demand_rule.py
# Summary: Realizes UCA not-provided, UCA too-late and DCA provided: every other state jumps to the action's state as soon as the context holds.

import logging

from bl.rules.base_rule import BaseSynthesisRule, RuleApplication, RuleResult, add_transition
from dal.statechart_models import Guard, Statechart, Transition, TransitionKind

logger = logging.getLogger(__name__)


class DemandRule(BaseSynthesisRule):
    """
    Adds s -> s_action on the context for every state s other than the action's own states.
    No self-loop is added: once the action is sent the machine only leaves on contrary evidence.
    """

    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        action = application.instance.action
        target = statechart.base_state_id(action)
        result = statechart
        for state in statechart.states:
            if state.id == target or (state.emits == action and state.is_split):
                continue
            result = add_transition(result, Transition(state.id, target, Guard(application.valuations),
                                                       TransitionKind.DEMAND, provenance=(application.label,)))
        logger.debug("Demand %s: %d valuations into %s", application.label, len(application.valuations), target)
        return RuleResult(result)
