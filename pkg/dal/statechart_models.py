# Copyright (c) 2024 by Jonathan AW

"""
In-memory model of a synthesized safe behavior model: a flat statechart whose states each emit one control action.

Design Patterns:
1. Value Objects:
- State, Guard, Transition, Note and Statechart are frozen dataclasses. Synthesis steps return new statecharts via dataclasses.replace instead of mutating.

2. Encapsulation:
- Statechart answers the questions the services keep asking: outgoing/incoming transitions, the transition taken for a valuation, reachability and determinism.

3. Semantic Guards:
- A Guard is the exact set of valuations enabling it. Display formulas are derived from it (utils/valuation_utils.py), never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from dal.models import Context, ContextValuation, ProcessModelVariable
from exceptions import NondeterministicStatechartException

INITIAL_STATE = "s0"
NO_ACTION = "none"


class StateOrigin(str, Enum):
    INITIAL = "initial"
    BASE = "base"
    SPLIT_APPLIED_TOO_LONG = "split-applied-too-long"
    SPLIT_STOPPED_TOO_SOON = "split-stopped-too-soon"


class TransitionKind(str, Enum):
    """Transition families, listed in priority order."""
    DEMAND = "demand"
    SPLIT_ENTRY = "split-entry"
    FORBID = "forbid"
    ESCAPE = "escape"

    @property
    def rank(self) -> int:
        return list(TransitionKind).index(self)


@dataclass(frozen=True)
class State:
    id: str
    emits: Optional[str] = None
    origin: StateOrigin = StateOrigin.BASE
    split_context: Optional[Context] = None

    @property
    def is_split(self) -> bool:
        return self.split_context is not None


@dataclass(frozen=True)
class Guard:
    valuations: FrozenSet[ContextValuation] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "valuations", frozenset(self.valuations))

    def enabled(self, valuation: ContextValuation) -> bool:
        return valuation in self.valuations

    @property
    def is_empty(self) -> bool:
        return not self.valuations

    def union(self, other: Iterable[ContextValuation]) -> Guard:
        return Guard(self.valuations | frozenset(other))

    def intersection(self, other: Iterable[ContextValuation]) -> Guard:
        return Guard(self.valuations & frozenset(other))

    def minus(self, other: Iterable[ContextValuation]) -> Guard:
        return Guard(self.valuations - frozenset(other))


@dataclass(frozen=True)
class Transition:
    source: str
    target: str
    guard: Guard
    kind: TransitionKind
    priority: int = 0
    provenance: Tuple[str, ...] = ()

    @property
    def order_key(self):
        return self.priority, self.kind.rank, self.target

    def with_guard(self, guard: Guard) -> Transition:
        return replace(self, guard=guard)


@dataclass(frozen=True)
class Note:
    """A report entry for a rule that produced a formula but no machine change."""
    rule_id: str
    action: str
    context: str
    message: str


@dataclass(frozen=True)
class Statechart:
    name: str
    states: Tuple[State, ...]
    transitions: Tuple[Transition, ...] = ()
    initial: str = INITIAL_STATE
    variables: Tuple[ProcessModelVariable, ...] = ()
    inputs: Tuple[str, ...] = ()
    actions: Tuple[str, ...] = ()
    _index: Dict[str, State] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "_index", {state.id: state for state in self.states})

    @property
    def state_ids(self) -> Tuple[str, ...]:
        return tuple(state.id for state in self.states)

    @property
    def output_symbols(self) -> Tuple[str, ...]:
        return (NO_ACTION,) + tuple(self.actions)

    def has_state(self, state_id: str) -> bool:
        return state_id in self._index

    def state(self, state_id: str) -> State:
        return self._index[state_id]

    def emits(self, state_id: str) -> Optional[str]:
        return self._index[state_id].emits

    def outgoing(self, state_id: str) -> List[Transition]:
        return sorted((t for t in self.transitions if t.source == state_id), key=lambda t: t.order_key)

    def incoming(self, state_id: str) -> List[Transition]:
        return [t for t in self.transitions if t.target == state_id]

    def states_of(self, action: str) -> List[State]:
        return [state for state in self.states if state.emits == action]

    def split_states_of(self, action: str) -> List[State]:
        return [state for state in self.states_of(action) if state.is_split]

    def base_state_id(self, action: str) -> str:
        return f"s_{action}"

    def enabled_transitions(self, state_id: str, valuation: ContextValuation) -> List[Transition]:
        return [t for t in self.outgoing(state_id) if t.guard.enabled(valuation)]

    def take(self, state_id: str, valuation: ContextValuation) -> Optional[Transition]:
        """The highest-priority enabled transition, or None when the machine stays."""
        enabled = self.enabled_transitions(state_id, valuation)
        if len(enabled) > 1 and enabled[0].priority == enabled[1].priority:
            raise NondeterministicStatechartException(
                f"State {state_id}: {len(enabled)} transitions enabled at priority {enabled[0].priority} on {valuation}")
        return enabled[0] if enabled else None

    def step(self, state_id: str, valuation: ContextValuation) -> str:
        transition = self.take(state_id, valuation)
        return transition.target if transition else state_id

    def reachable(self) -> Set[str]:
        seen = {self.initial}
        frontier = [self.initial]
        while frontier:
            current = frontier.pop()
            for transition in self.transitions:
                if transition.source == current and transition.target not in seen:
                    seen.add(transition.target)
                    frontier.append(transition.target)
        return seen

    def alphabet(self) -> Tuple[ContextValuation, ...]:
        names = [variable.name for variable in self.variables]
        combos = itertools.product(*(variable.value_names for variable in self.variables))
        return tuple(ContextValuation(tuple(zip(names, combo))) for combo in combos)

    def determinism_violations(self) -> List[Tuple[str, ContextValuation, List[Transition]]]:
        """Every (state, valuation) with more than one enabled stored guard."""
        violations = []
        alphabet = self.alphabet()
        for state in self.states:
            for valuation in alphabet:
                enabled = self.enabled_transitions(state.id, valuation)
                if len(enabled) > 1:
                    violations.append((state.id, valuation, enabled))
        return violations

    def is_deterministic(self) -> bool:
        return not self.determinism_violations()
