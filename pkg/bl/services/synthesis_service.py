# Copyright (c) 2024 by Jonathan AW
# synthesis_service.py
# This file contains the SynthesisService class that builds the safe behavior model of a controller from its STPA rules.

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from bl.factories.base_synthesis_rule_factory import BaseSynthesisRuleFactory
from bl.factories.synthesis_rule_factory import SynthesisRuleFactory
from bl.ltl.formulas import LtlFormula
from bl.ltl.translation import translate_model
from bl.rules.base_rule import RuleApplication
from bl.services.validation_service import Severity, ValidationService
from dal.models import RuleInstance, RuleRole, StpaModel, expand_context
from dal.statechart_models import INITIAL_STATE, Note, State, StateOrigin, Statechart, Transition
from exceptions import ModelValidationException
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)

"""
Summary: The SynthesisService class runs the synthesis pipeline: initial states, demands, forbids, applied-too-long splits, stopped-too-soon splits, too-early notes, priority assignment and optimization.

Design Patterns:
1. Facade:
- synthesize() is the only entry point the CLI needs; the individual steps stay public so tests can drive them one at a time.

2. Dependency Injection:
- The validation service and the rule factory are constructor arguments, defaulting to the production implementations.

3. Strategy via Factory:
- Each rule instance is realized by the strategy the factory returns for its role; the service only fixes the order.

4. Error Handling:
- Models with ERROR diagnostics are refused with ModelValidationException, logged through handle_error.
"""

PIPELINE_ORDER = (RuleRole.DEMAND, RuleRole.FORBID, RuleRole.APPLIED_TOO_LONG, RuleRole.STOPPED_TOO_SOON,
                  RuleRole.TOO_EARLY)


@dataclass(frozen=True)
class SynthesisResult:
    statechart: Statechart
    formulas: Tuple[Tuple[RuleInstance, LtlFormula], ...] = ()
    notes: Tuple[Note, ...] = field(default_factory=tuple)


class SynthesisService:
    """
    Service class turning a validated StpaModel into a deterministic statechart plus its formulas.
    """

    def __init__(self, validation_service: Optional[ValidationService] = None,
                 rule_factory: Optional[BaseSynthesisRuleFactory] = None):
        self.validation_service = validation_service or ValidationService()
        self.rule_factory = rule_factory or SynthesisRuleFactory()

    def init_statechart(self, model: StpaModel) -> Statechart:
        """
        s0 plus one state per control action, no transitions.
        """
        states = [State(INITIAL_STATE, None, StateOrigin.INITIAL)]
        states += [State(f"s_{action}", action, StateOrigin.BASE) for action in model.action_names]
        if not model.control_actions:
            logger.warning("Controller %s has no control actions; the machine only has s0", model.controller)
        return Statechart(model.controller, tuple(states), (), INITIAL_STATE, model.process_model,
                          model.input_names(), model.action_names)

    def application(self, model: StpaModel, instance: RuleInstance) -> RuleApplication:
        return RuleApplication(instance, expand_context(model, instance.context), frozenset(model.valuations()))

    def apply_instance(self, statechart: Statechart, model: StpaModel,
                       instance: RuleInstance) -> Tuple[Statechart, Tuple[Note, ...]]:
        rule = self.rule_factory.load_rule(instance.role)
        result = rule.apply(statechart, self.application(model, instance))
        return result.statechart, result.notes

    def assign_priorities(self, statechart: Statechart, order: Optional[Dict[str, int]] = None) -> Statechart:
        """
        Number the outgoing transitions of every state (demand, split-entry, forbid, escape; ties by first
        provenance, then target) and refine each guard by the guards ranked above it.
        """
        order = order or {}

        def rank(transition: Transition):
            first = min((order.get(label, len(order)) for label in transition.provenance), default=len(order))
            return transition.kind.rank, first, transition.target

        transitions: List[Transition] = []
        for state in statechart.states:
            covered = frozenset()
            for priority, transition in enumerate(sorted(
                    (t for t in statechart.transitions if t.source == state.id), key=rank), start=1):
                refined = transition.guard.minus(covered)
                covered |= transition.guard.valuations
                transitions.append(replace(transition, guard=refined, priority=priority))
        return replace(statechart, transitions=tuple(transitions))

    def optimize(self, statechart: Statechart) -> Statechart:
        """
        Drop transitions with empty guards and states unreachable from s0, until nothing changes.
        Priorities are renumbered afterwards so they stay consecutive.
        """
        current = statechart
        while True:
            live = tuple(t for t in current.transitions if not t.guard.is_empty)
            pruned = replace(current, transitions=live)
            reachable = pruned.reachable()
            states = tuple(s for s in pruned.states if s.id in reachable)
            transitions = tuple(t for t in live if t.source in reachable and t.target in reachable)
            next_chart = replace(pruned, states=states, transitions=transitions)
            if next_chart == current:
                break
            removed = set(current.state_ids) - set(next_chart.state_ids)
            if removed:
                logger.info("Removed unreachable states: %s", ", ".join(sorted(removed)))
            current = next_chart
        return self._renumber(current)

    @staticmethod
    def _renumber(statechart: Statechart) -> Statechart:
        transitions: List[Transition] = []
        for state in statechart.states:
            for priority, transition in enumerate(statechart.outgoing(state.id), start=1):
                transitions.append(replace(transition, priority=priority))
        return replace(statechart, transitions=tuple(transitions))

    def synthesize(self, model: StpaModel) -> SynthesisResult:
        """
        Validate, translate and run the whole pipeline.
        """
        diagnostics = self.validation_service.validate(model)
        errors = [d for d in diagnostics if d.severity == Severity.ERROR]
        if errors:
            handle_error(ModelValidationException(errors), f"Cannot synthesize controller {model.controller}")

        formulas = tuple(translate_model(model))
        instances = model.instances()
        order = {instance.label: instance.order for instance in instances}

        statechart = self.init_statechart(model)
        notes: List[Note] = []
        for role in PIPELINE_ORDER:
            for instance in (i for i in instances if i.role == role):
                statechart, produced = self.apply_instance(statechart, model, instance)
                notes.extend(produced)
        statechart = self.assign_priorities(statechart, order)
        if instances:
            # a rule-free model keeps its initial states for the emitted skeleton
            statechart = self.optimize(statechart)
        logger.info("Synthesized %s: %d states, %d transitions", model.controller, len(statechart.states),
                    len(statechart.transitions))
        return SynthesisResult(statechart, formulas, tuple(notes))
