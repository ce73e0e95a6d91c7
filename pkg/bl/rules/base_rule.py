# Copyright (c) 2024 by Jonathan AW
# base_rule.py
# Summary: The BaseSynthesisRule class defines the interface every synthesis rule implements, plus the transition bookkeeping they share.
"""
Design Pattern: Strategy

1. Abstract Base Class:
- BaseSynthesisRule declares apply(); one concrete class per rule role (demand, forbid, too-early, applied-too-long, stopped-too-soon) implements it.

2. Immutability:
- apply() receives a Statechart and returns a new one together with any notes. Rules never mutate their input, so the pipeline can be replayed step by step in tests.

3. Shared Bookkeeping:
- add_transition merges transitions with the same (source, target, kind) by uniting guards and provenance, which makes every rule idempotent.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Tuple

from dal.models import ContextValuation, RuleInstance
from dal.statechart_models import Guard, Note, Statechart, Transition
from utils.valuation_utils import complement


@dataclass(frozen=True)
class RuleApplication:
    """One rule instance together with its expanded context and the full valuation alphabet."""
    instance: RuleInstance
    valuations: FrozenSet[ContextValuation]
    alphabet: FrozenSet[ContextValuation]

    @property
    def label(self) -> str:
        return self.instance.label

    @property
    def outside(self) -> FrozenSet[ContextValuation]:
        return complement(self.valuations, self.alphabet)


@dataclass(frozen=True)
class RuleResult:
    statechart: Statechart
    notes: Tuple[Note, ...] = field(default_factory=tuple)


def covered_by(transitions: Iterable[Transition]) -> FrozenSet[ContextValuation]:
    result = frozenset()
    for transition in transitions:
        result |= transition.guard.valuations
    return result


def _merge_provenance(first: Tuple[str, ...], second: Tuple[str, ...]) -> Tuple[str, ...]:
    return first + tuple(label for label in second if label not in first)


def add_transition(statechart: Statechart, transition: Transition) -> Statechart:
    """Add a transition, uniting it with an existing one of the same source, target and kind."""
    if transition.guard.is_empty:
        return statechart
    transitions: List[Transition] = []
    merged = False
    for existing in statechart.transitions:
        if (existing.source, existing.target, existing.kind) == (transition.source, transition.target, transition.kind):
            existing = replace(existing, guard=existing.guard.union(transition.guard.valuations),
                               provenance=_merge_provenance(existing.provenance, transition.provenance))
            merged = True
        transitions.append(existing)
    if not merged:
        transitions.append(transition)
    return replace(statechart, transitions=tuple(transitions))


def replace_transitions(statechart: Statechart, removed: Iterable[Transition],
                        added: Iterable[Transition]) -> Statechart:
    removed = list(removed)
    kept = tuple(t for t in statechart.transitions if t not in removed)
    result = replace(statechart, transitions=kept)
    for transition in added:
        result = add_transition(result, transition)
    return result


def with_label(transition: Transition, label: str) -> Tuple[str, ...]:
    return _merge_provenance(transition.provenance, (label,))


class BaseSynthesisRule(ABC):
    """
    Abstract base class for the rules that turn one rule instance into statechart changes.
    """

    @abstractmethod
    def apply(self, statechart: Statechart, application: RuleApplication) -> RuleResult:
        """
        Apply the rule for one instance.

        Args:
            statechart (Statechart): The machine built so far.
            application (RuleApplication): The instance with its expanded valuations.

        Returns:
            RuleResult: The new machine and any notes the rule produced.
        """
        pass
