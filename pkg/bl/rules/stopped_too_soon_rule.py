# Copyright (c) 2024 by Jonathan AW
# stopped_too_soon_rule.py
# Summary: Realizes UCA stopped-too-soon: once the action is sent in the context, the split state keeps sending it while the context holds.

import logging
from dataclasses import replace

from bl.rules.base_rule import RuleApplication, RuleResult, covered_by, replace_transitions, with_label
from bl.rules.split_rule import SplitRule
from dal.statechart_models import StateOrigin, Statechart

logger = logging.getLogger(__name__)


class StoppedTooSoonRule(SplitRule):
    """
    Leaves the machine unchanged when no outgoing transition of s_action is enabled on the context.
    Otherwise splits s_action (reusing a split on the same valuations) and removes the context from every
    outgoing guard of the split. No escape transition is added.
    """

    origin = StateOrigin.SPLIT_STOPPED_TOO_SOON

    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        action = application.instance.action
        base = statechart.base_state_id(action)
        if not covered_by(statechart.outgoing(base)) & application.valuations:
            logger.debug("Stopped-too-soon %s already satisfied by %s", application.label, base)
            return RuleResult(statechart)

        split = self.find_split(statechart, application)
        result = statechart
        if split is None:
            # only new splits inherit transitions into the other duplicates
            result = self.create_split(statechart, application, copy_duplicate_targets=True)
            split = result.states[-1]

        outgoing = result.outgoing(split.id)
        narrowed = [replace(t, guard=t.guard.minus(application.valuations), provenance=with_label(t, application.label))
                    for t in outgoing]
        result = replace_transitions(result, outgoing, [t for t in narrowed if not t.guard.is_empty])
        if not result.outgoing(split.id):
            logger.warning("Split %s for %s has no outgoing transitions", split.id, application.label)
        return RuleResult(result)
