# Copyright (c) 2024 by Jonathan AW
# applied_too_long_rule.py
# Summary: Realizes UCA applied-too-long: the action is sent from a split state that is left as soon as the context stops holding.

import logging

from bl.rules.base_rule import RuleApplication, RuleResult, add_transition, covered_by
from bl.rules.split_rule import SplitRule
from dal.statechart_models import Guard, StateOrigin, Statechart, Transition, TransitionKind

logger = logging.getLogger(__name__)


class AppliedTooLongRule(SplitRule):
    """
    Leaves the machine unchanged when s_action already leaves to a non-action state on every valuation outside
    the context. Otherwise splits s_action and adds an escape split -> s0 on the complement of the context,
    enabled only where no other outgoing transition of the split is.
    """

    origin = StateOrigin.SPLIT_APPLIED_TOO_LONG

    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        action = application.instance.action
        base = statechart.base_state_id(action)
        leaving = [t for t in statechart.outgoing(base) if statechart.emits(t.target) != action]
        if application.outside <= covered_by(leaving):
            logger.debug("Applied-too-long %s already satisfied by %s", application.label, base)
            return RuleResult(statechart)
        if self.find_split(statechart, application) is not None:
            logger.debug("Applied-too-long %s reuses an existing split", application.label)
            return RuleResult(statechart)

        result = self.create_split(statechart, application, copy_duplicate_targets=False)
        split = result.states[-1]
        escape = application.outside - covered_by(result.outgoing(split.id))
        result = add_transition(result, Transition(split.id, result.initial, Guard(escape), TransitionKind.ESCAPE,
                                                   provenance=(application.label,)))
        return RuleResult(result)
