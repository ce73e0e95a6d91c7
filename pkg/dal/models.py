# Copyright (c) 2024 by Jonathan AW

"""
In-memory model of an STPA analysis for a single controller.
These classes are what the .stpa reader produces and what every service consumes.
All of them are frozen dataclasses, so a parsed model can be shared freely between services and worker processes.

Design Patterns:
1. Value Objects:
- Every class is an immutable value object; equality is structural, which the round-trip tests rely on.

2. Data Validation:
- Construction invariants (unique names, boolean domains, MIN/MAX placement, resolvable references) are checked in __post_init__ and reported through custom exceptions.

3. Encapsulation:
- StpaModel owns identifier resolution and the enumeration of context valuations, the finite alphabet every later stage works on.

4. Use of Type Annotations:
- Type annotations are used throughout, including tagged unions for value domains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from exceptions import InvalidStpaModelException, UnresolvedReferenceException


class BoundKind(str, Enum):
    MIN = "MIN"
    MAX = "MAX"
    NUMBER = "number"
    REFERENCE = "reference"


@dataclass(frozen=True)
class Bound:
    """One end of a value range: MIN, MAX, a numeric literal or a named reference parameter."""
    kind: BoundKind
    text: str = ""

    @staticmethod
    def minimum() -> Bound:
        return Bound(BoundKind.MIN, "MIN")

    @staticmethod
    def maximum() -> Bound:
        return Bound(BoundKind.MAX, "MAX")

    @staticmethod
    def number(text: str) -> Bound:
        return Bound(BoundKind.NUMBER, text)

    @staticmethod
    def reference(name: str) -> Bound:
        return Bound(BoundKind.REFERENCE, name)

    @property
    def is_unbounded(self) -> bool:
        return self.kind in (BoundKind.MIN, BoundKind.MAX)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class BooleanDomain:
    value: bool


@dataclass(frozen=True)
class SingletonDomain:
    bound: Bound


@dataclass(frozen=True)
class IntervalDomain:
    lower: Bound
    lower_inclusive: bool
    upper: Bound
    upper_inclusive: bool


@dataclass(frozen=True)
class OpaqueDomain:
    pass


ValueDomain = Union[BooleanDomain, SingletonDomain, IntervalDomain, OpaqueDomain]


@dataclass(frozen=True)
class AbstractValue:
    name: str
    domain: ValueDomain = field(default_factory=OpaqueDomain)

    def __post_init__(self):
        if isinstance(self.domain, IntervalDomain):
            if self.domain.upper.kind == BoundKind.MIN:
                raise InvalidStpaModelException(f"Value '{self.name}': MIN cannot be an upper bound")
            if self.domain.lower.kind == BoundKind.MAX:
                raise InvalidStpaModelException(f"Value '{self.name}': MAX cannot be a lower bound")
        if isinstance(self.domain, SingletonDomain) and self.domain.bound.is_unbounded:
            raise InvalidStpaModelException(f"Value '{self.name}': a singleton range needs a finite bound")

    @property
    def is_numeric(self) -> bool:
        return isinstance(self.domain, (SingletonDomain, IntervalDomain))


@dataclass(frozen=True)
class ProcessModelVariable:
    name: str
    values: Tuple[AbstractValue, ...]

    def __post_init__(self):
        if not self.values:
            raise InvalidStpaModelException(f"Variable '{self.name}' declares no values")
        names = [value.name for value in self.values]
        if len(set(names)) != len(names):
            raise InvalidStpaModelException(f"Variable '{self.name}' declares duplicate values")
        booleans = [value for value in self.values if isinstance(value.domain, BooleanDomain)]
        if booleans:
            literals = sorted(value.domain.value for value in booleans)
            if len(self.values) != 2 or literals != [False, True]:
                raise InvalidStpaModelException(
                    f"Variable '{self.name}': boolean values must be exactly one true and one false")

    @property
    def value_names(self) -> Tuple[str, ...]:
        return tuple(value.name for value in self.values)

    @property
    def is_boolean(self) -> bool:
        return any(isinstance(value.domain, BooleanDomain) for value in self.values)

    @property
    def is_enum_like(self) -> bool:
        return all(isinstance(value.domain, OpaqueDomain) for value in self.values)

    @property
    def concrete_type(self) -> str:
        if self.is_boolean:
            return "boolean"
        if any(value.is_numeric for value in self.values):
            return "number"
        return "enum"

    def value(self, name: str) -> AbstractValue:
        for value in self.values:
            if value.name == name:
                return value
        raise UnresolvedReferenceException(f"Variable '{self.name}' has no value '{name}'")


@dataclass(frozen=True)
class ControlAction:
    name: str


@dataclass(frozen=True)
class Context:
    """One row of a context table: a named, ordered, partial assignment of process-model variables."""
    name: str
    assignments: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        if not self.assignments:
            raise InvalidStpaModelException(f"Context '{self.name}' is empty")
        variables = [variable for variable, _ in self.assignments]
        if len(set(variables)) != len(variables):
            raise InvalidStpaModelException(f"Context '{self.name}' assigns a variable twice")

    def as_dict(self) -> Dict[str, str]:
        return dict(self.assignments)

    def __str__(self) -> str:
        return ", ".join(f"{variable}={value}" for variable, value in self.assignments)


class UcaType(str, Enum):
    PROVIDED = "provided"
    NOT_PROVIDED = "not-provided"
    TOO_EARLY = "too-early"
    TOO_LATE = "too-late"
    APPLIED_TOO_LONG = "applied-too-long"
    STOPPED_TOO_SOON = "stopped-too-soon"

    @property
    def keyword(self) -> str:
        head, *tail = self.value.split("-")
        return head + "".join(part.capitalize() for part in tail)

    @classmethod
    def from_keyword(cls, keyword: str) -> Optional[UcaType]:
        return next((kind for kind in cls if kind.keyword == keyword), None)


class DcaType(str, Enum):
    PROVIDED = "provided"
    NOT_PROVIDED = "not-provided"

    @property
    def keyword(self) -> str:
        return UcaType(self.value).keyword

    @classmethod
    def from_keyword(cls, keyword: str) -> Optional[DcaType]:
        return next((kind for kind in cls if kind.keyword == keyword), None)


class RuleSource(str, Enum):
    UCA = "uca"
    DCA = "dca"


class RuleRole(str, Enum):
    """What a rule instance asks of the synthesized machine."""
    DEMAND = "demand"
    FORBID = "forbid"
    TOO_EARLY = "too-early"
    APPLIED_TOO_LONG = "applied-too-long"
    STOPPED_TOO_SOON = "stopped-too-soon"


_UCA_ROLES = {
    UcaType.PROVIDED: RuleRole.FORBID,
    UcaType.NOT_PROVIDED: RuleRole.DEMAND,
    UcaType.TOO_LATE: RuleRole.DEMAND,
    UcaType.TOO_EARLY: RuleRole.TOO_EARLY,
    UcaType.APPLIED_TOO_LONG: RuleRole.APPLIED_TOO_LONG,
    UcaType.STOPPED_TOO_SOON: RuleRole.STOPPED_TOO_SOON,
}

# a desired action swaps the meaning of provided / not-provided
_DCA_ROLES = {
    DcaType.PROVIDED: RuleRole.DEMAND,
    DcaType.NOT_PROVIDED: RuleRole.FORBID,
}


@dataclass(frozen=True)
class UcaRule:
    id: str
    action: str
    kind: UcaType
    contexts: Tuple[Context, ...]

    source = RuleSource.UCA


@dataclass(frozen=True)
class DcaRule:
    id: str
    action: str
    kind: DcaType
    contexts: Tuple[Context, ...]

    source = RuleSource.DCA


Rule = Union[UcaRule, DcaRule]


@dataclass(frozen=True)
class RuleInstance:
    """A single (action, kind, context) triple; each context row of a rule is one instance."""
    rule_id: str
    source: RuleSource
    kind: Union[UcaType, DcaType]
    action: str
    context: Context
    order: int = 0

    @property
    def role(self) -> RuleRole:
        if self.source == RuleSource.UCA:
            return _UCA_ROLES[self.kind]
        return _DCA_ROLES[self.kind]

    @property
    def label(self) -> str:
        return f"{self.rule_id}.{self.context.name}"


@dataclass(frozen=True, order=True)
class ContextValuation:
    """A total assignment of every process-model variable, in declaration order."""
    items: Tuple[Tuple[str, str], ...]

    def __getitem__(self, variable: str) -> str:
        for name, value in self.items:
            if name == variable:
                return value
        raise KeyError(variable)

    def as_dict(self) -> Dict[str, str]:
        return dict(self.items)

    def satisfies(self, context: Context) -> bool:
        values = self.as_dict()
        return all(values.get(variable) == value for variable, value in context.assignments)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{name}:{value}" for name, value in self.items) + ")"


@dataclass(frozen=True)
class StpaModel:
    controller: str
    process_model: Tuple[ProcessModelVariable, ...] = ()
    control_actions: Tuple[ControlAction, ...] = ()
    ucas: Tuple[UcaRule, ...] = ()
    dcas: Tuple[DcaRule, ...] = ()

    def __post_init__(self):
        variable_names = [variable.name for variable in self.process_model]
        if len(set(variable_names)) != len(variable_names):
            raise InvalidStpaModelException("Duplicate process-model variable")
        action_names = [action.name for action in self.control_actions]
        if len(set(action_names)) != len(action_names):
            raise InvalidStpaModelException("Duplicate control action")
        rule_ids = [rule.id for rule in self.rules]
        if len(set(rule_ids)) != len(rule_ids):
            raise InvalidStpaModelException("Duplicate rule id")
        for rule in self.rules:
            if rule.action not in action_names:
                raise UnresolvedReferenceException(f"Rule '{rule.id}' refers to unknown control action '{rule.action}'")
            if not rule.contexts:
                raise InvalidStpaModelException(f"Rule '{rule.id}' has no contexts")
            for context in rule.contexts:
                self.resolve_context(context)

    @property
    def rules(self) -> Tuple[Rule, ...]:
        return tuple(self.ucas) + tuple(self.dcas)

    @property
    def action_names(self) -> Tuple[str, ...]:
        return tuple(action.name for action in self.control_actions)

    def variable(self, name: str) -> ProcessModelVariable:
        for variable in self.process_model:
            if variable.name == name:
                return variable
        raise UnresolvedReferenceException(f"Unknown process-model variable '{name}'")

    def resolve_context(self, context: Context) -> None:
        for variable, value in context.assignments:
            self.variable(variable).value(value)

    def instances(self) -> List[RuleInstance]:
        """Every rule instance, UCAs before DCAs, in declaration order."""
        result = []
        for rule in self.rules:
            for context in rule.contexts:
                result.append(RuleInstance(rule.id, rule.source, rule.kind, rule.action, context, len(result)))
        return result

    def valuations(self) -> Tuple[ContextValuation, ...]:
        names = [variable.name for variable in self.process_model]
        combos = itertools.product(*(variable.value_names for variable in self.process_model))
        return tuple(ContextValuation(tuple(zip(names, combo))) for combo in combos)

    def input_names(self) -> Tuple[str, ...]:
        """Named bounds used by value ranges, in order of first appearance."""
        seen: List[str] = []
        for bound in self._bounds():
            if bound.kind == BoundKind.REFERENCE and bound.text not in seen:
                seen.append(bound.text)
        return tuple(seen)

    def _bounds(self) -> Iterator[Bound]:
        for variable in self.process_model:
            for value in variable.values:
                if isinstance(value.domain, SingletonDomain):
                    yield value.domain.bound
                elif isinstance(value.domain, IntervalDomain):
                    yield value.domain.lower
                    yield value.domain.upper


def expand_context(model: StpaModel, context: Context) -> FrozenSet[ContextValuation]:
    """
    Every total valuation that agrees with the context on its assigned variables.
    """
    model.resolve_context(context)
    return expand_over(model.process_model, context)


def expand_over(variables: Tuple[ProcessModelVariable, ...], context: Context) -> FrozenSet[ContextValuation]:
    fixed = context.as_dict()
    names = [variable.name for variable in variables]
    choices = [
        (fixed[variable.name],) if variable.name in fixed else variable.value_names
        for variable in variables
    ]
    return frozenset(ContextValuation(tuple(zip(names, combo))) for combo in itertools.product(*choices))
