# Copyright (c) 2024 by Jonathan AW
# split_rule.py
# Summary: Shared machinery for the two rules that duplicate an action's state into a state remembering that a context holds.

import logging
from dataclasses import replace
from typing import Optional

from bl.rules.base_rule import (BaseSynthesisRule, RuleApplication, add_transition, covered_by, replace_transitions,
                                with_label)
from dal.models import expand_over
from dal.statechart_models import Guard, State, StateOrigin, Statechart, Transition, TransitionKind

logger = logging.getLogger(__name__)


class SplitRule(BaseSynthesisRule):
    """
    Base for applied-too-long and stopped-too-soon. Subclasses decide when a split is needed and what happens
    to the split state's transitions afterwards.
    """

    origin: StateOrigin = StateOrigin.SPLIT_APPLIED_TOO_LONG

    @staticmethod
    def find_split(statechart: Statechart, application: RuleApplication) -> Optional[State]:
        """An existing duplicate of the action split on the same valuation set."""
        for state in statechart.split_states_of(application.instance.action):
            if expand_over(statechart.variables, state.split_context) == application.valuations:
                return state
        return None

    @staticmethod
    def split_id(statechart: Statechart, application: RuleApplication) -> str:
        stem = f"{statechart.base_state_id(application.instance.action)}_{application.instance.context.name}"
        candidate, suffix = stem, 2
        while statechart.has_state(candidate):
            candidate, suffix = f"{stem}_{suffix}", suffix + 1
        return candidate

    def create_split(self, statechart: Statechart, application: RuleApplication,
                     copy_duplicate_targets: bool) -> Statechart:
        """
        Add the split state, reroute the base state's incoming transitions on the context into it, copy the base
        state's outgoing transitions onto it and add the entry transition base -> split.
        """
        action = application.instance.action
        base = statechart.base_state_id(action)
        split = State(self.split_id(statechart, application), action, self.origin, application.instance.context)
        result = replace(statechart, states=statechart.states + (split,))

        for incoming in statechart.incoming(base):
            inside = incoming.guard.intersection(application.valuations)
            outside = incoming.guard.minus(application.valuations)
            added = []
            if not outside.is_empty:
                added.append(incoming.with_guard(outside))
            if not inside.is_empty:
                added.append(replace(incoming, target=split.id, guard=inside,
                                     provenance=with_label(incoming, application.label)))
            result = replace_transitions(result, [incoming], added)

        for outgoing in statechart.outgoing(base):
            target = statechart.state(outgoing.target)
            if target.emits == action and not copy_duplicate_targets:
                continue
            result = add_transition(result, replace(outgoing, source=split.id,
                                                    provenance=with_label(outgoing, application.label)))

        entry = application.valuations - covered_by(result.outgoing(base))
        result = add_transition(result, Transition(base, split.id, Guard(entry), TransitionKind.SPLIT_ENTRY,
                                                   provenance=(application.label,)))
        logger.info("Split %s created for %s", split.id, application.label)
        return result

