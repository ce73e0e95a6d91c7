# Copyright (c) 2024 by Jonathan AW
# validation_service.py
# This file contains the ValidationService class that checks an STPA model for rule conflicts before synthesis.

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from dal.models import (Bound, BoundKind, ContextValuation, IntervalDomain, RuleInstance, RuleRole, RuleSource,
                        SingletonDomain, StpaModel, expand_context)

logger = logging.getLogger(__name__)

"""
Summary: The ValidationService class decides whether the synthesis rules can realize a model. Conflicts are found on expanded valuation sets, never on the written contexts, so syntactically different contexts that overlap are caught.

Design Patterns:
1. Clear Separation of Concerns:
- One private method per diagnostic family; validate() only collects and orders their results.

2. Determinism:
- Pairs are visited in a canonical order and diagnostics are sorted, so permuting the rule lists yields the same list.

3. Use of Type Annotations:
- Diagnostic is a frozen dataclass carrying severity, code, rule ids and message.
"""


class Severity(str, Enum):
    ERROR = "ERROR"
    WARNING = "WARNING"


@dataclass(frozen=True, order=True)
class Diagnostic:
    severity: Severity
    code: str
    rule_ids: Tuple[str, ...]
    message: str

    def __str__(self) -> str:
        rules = f" [{', '.join(self.rule_ids)}]" if self.rule_ids else ""
        return f"{self.severity.value} {self.code}{rules}: {self.message}"


def _show(valuations: Iterable[ContextValuation], limit: int = 3) -> str:
    ordered = sorted(valuations)
    shown = ", ".join(str(valuation) for valuation in ordered[:limit])
    return shown + (f" and {len(ordered) - limit} more" if len(ordered) > limit else "")


def _compare(left: Bound, right: Bound) -> Optional[int]:
    """-1, 0 or 1 when the bounds are comparable without knowing reference values, else None."""
    if left == right:
        return 0
    if left.kind == BoundKind.MIN or right.kind == BoundKind.MAX:
        return -1
    if left.kind == BoundKind.MAX or right.kind == BoundKind.MIN:
        return 1
    if left.kind == BoundKind.NUMBER and right.kind == BoundKind.NUMBER:
        a, b = float(left.text), float(right.text)
        return (a > b) - (a < b)
    return None


def _as_interval(domain) -> Optional[IntervalDomain]:
    if isinstance(domain, SingletonDomain):
        return IntervalDomain(domain.bound, True, domain.bound, True)
    if isinstance(domain, IntervalDomain):
        return domain
    return None


def _entirely_below(first: IntervalDomain, second: IntervalDomain) -> Optional[bool]:
    order = _compare(first.upper, second.lower)
    if order is None:
        return None
    return order < 0 or (order == 0 and not (first.upper_inclusive and second.lower_inclusive))


# (demand source, forbid source)
_CONFLICT_CODES = {
    (RuleSource.UCA, RuleSource.UCA): "unsatisfiable-uca-pair",
    (RuleSource.UCA, RuleSource.DCA): "contradicting-uca-dca",
    (RuleSource.DCA, RuleSource.UCA): "contradicting-uca-dca",
    (RuleSource.DCA, RuleSource.DCA): "contradicting-dca-pair",
}


class ValidationService:
    """
    Service class producing ERROR and WARNING diagnostics for an StpaModel.
    """

    def validate(self, model: StpaModel) -> List[Diagnostic]:
        instances = model.instances()
        expanded = {instance.label: expand_context(model, instance.context) for instance in instances}
        diagnostics: List[Diagnostic] = []
        diagnostics += self._demand_forbid_conflicts(model, instances, expanded)
        diagnostics += self._competing_demands(model, instances, expanded)
        diagnostics += self._split_conflicts(model, instances, expanded)
        diagnostics += self._range_warnings(model)
        diagnostics += self._structure_warnings(model, instances, expanded)
        result = sorted(set(diagnostics), key=lambda d: (d.severity != Severity.ERROR, d.code, d.rule_ids, d.message))
        logger.info("Validated %s: %d error(s), %d warning(s)", model.controller,
                    sum(d.severity == Severity.ERROR for d in result), sum(d.severity == Severity.WARNING for d in result))
        return result

    def has_errors(self, diagnostics: List[Diagnostic]) -> bool:
        return any(diagnostic.severity == Severity.ERROR for diagnostic in diagnostics)

    # ---------- helpers ----------

    @staticmethod
    def _by_role(instances: List[RuleInstance], action: str, *roles: RuleRole) -> List[RuleInstance]:
        return sorted((i for i in instances if i.action == action and i.role in roles), key=lambda i: i.label)

    @staticmethod
    def _union(instances: Iterable[RuleInstance], expanded) -> FrozenSet[ContextValuation]:
        result = frozenset()
        for instance in instances:
            result |= expanded[instance.label]
        return result

    def _must_stop(self, model, instances, expanded, action: str) -> FrozenSet[ContextValuation]:
        """Valuations on which `action` has to be withdrawn: its forbids and every other action's demands."""
        stops = self._union(self._by_role(instances, action, RuleRole.FORBID), expanded)
        for other in model.action_names:
            if other != action:
                stops |= self._union(self._by_role(instances, other, RuleRole.DEMAND), expanded)
        return stops

    # ---------- ERROR families ----------

    def _demand_forbid_conflicts(self, model, instances, expanded) -> List[Diagnostic]:
        diagnostics = []
        for action in model.action_names:
            for demand in self._by_role(instances, action, RuleRole.DEMAND):
                for forbid in self._by_role(instances, action, RuleRole.FORBID):
                    overlap = expanded[demand.label] & expanded[forbid.label]
                    if not overlap:
                        continue
                    code = _CONFLICT_CODES[(demand.source, forbid.source)]
                    diagnostics.append(Diagnostic(
                        Severity.ERROR, code, tuple(sorted({demand.rule_id, forbid.rule_id})),
                        f"'{action}' is both required ({demand.label}) and forbidden ({forbid.label}) on "
                        f"{_show(overlap)}"))
        return diagnostics

    def _competing_demands(self, model, instances, expanded) -> List[Diagnostic]:
        diagnostics = []
        actions = sorted(model.action_names)
        for index, first_action in enumerate(actions):
            for second_action in actions[index + 1:]:
                for first in self._by_role(instances, first_action, RuleRole.DEMAND):
                    for second in self._by_role(instances, second_action, RuleRole.DEMAND):
                        overlap = expanded[first.label] & expanded[second.label]
                        if overlap:
                            diagnostics.append(Diagnostic(
                                Severity.ERROR, "competing-demands", tuple(sorted({first.rule_id, second.rule_id})),
                                f"'{first_action}' ({first.label}) and '{second_action}' ({second.label}) are both "
                                f"required on {_show(overlap)}; only one control action can be sent"))
        return diagnostics

    def _split_conflicts(self, model, instances, expanded) -> List[Diagnostic]:
        diagnostics = []
        for action in model.action_names:
            must_stop = self._must_stop(model, instances, expanded, action)
            demands = self._by_role(instances, action, RuleRole.DEMAND)
            too_long = self._by_role(instances, action, RuleRole.APPLIED_TOO_LONG)
            too_soon = self._by_role(instances, action, RuleRole.STOPPED_TOO_SOON)

            for keep in too_soon:
                clash = expanded[keep.label] & must_stop
                if clash:
                    diagnostics.append(Diagnostic(
                        Severity.ERROR, "stopped-too-soon-conflict", (keep.rule_id,),
                        f"'{action}' must continue on {keep.label} but has to stop on {_show(clash)}"))

            for release in too_long:
                window = expanded[release.label]
                for demand in demands:
                    context = expanded[demand.label]
                    outside = context - window
                    idle = window - context - must_stop
                    if outside and idle:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR, "applied-too-long-demand-conflict",
                            tuple(sorted({release.rule_id, demand.rule_id})),
                            f"'{action}' is released on leaving {release.label} while {demand.label} can rise "
                            f"again on {_show(outside)}"))

            for index, first in enumerate(too_long):
                for second in too_long[index + 1:]:
                    left, right = expanded[first.label], expanded[second.label]
                    if left & right and left != right:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR, "overlapping-applied-too-long",
                            tuple(sorted({first.rule_id, second.rule_id})),
                            f"applied-too-long contexts {first.label} and {second.label} of '{action}' overlap "
                            f"without being equal"))

            for release in too_long:
                for keep in too_soon:
                    left, right = expanded[release.label], expanded[keep.label]
                    if left & right and left != right:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR, "overlapping-split-contexts",
                            tuple(sorted({release.rule_id, keep.rule_id})),
                            f"applied-too-long {release.label} and stopped-too-soon {keep.label} of '{action}' "
                            f"overlap without being equal"))
        return diagnostics

    # ---------- WARNING families ----------

    def _range_warnings(self, model: StpaModel) -> List[Diagnostic]:
        diagnostics = []
        for variable in model.process_model:
            intervals = [(value.name, _as_interval(value.domain)) for value in variable.values]
            intervals = [(name, interval) for name, interval in intervals if interval is not None]
            if not intervals:
                continue
            for index, (first_name, first) in enumerate(intervals):
                for second_name, second in intervals[index + 1:]:
                    below = _entirely_below(first, second)
                    above = _entirely_below(second, first)
                    if below is False and above is False:
                        diagnostics.append(Diagnostic(
                            Severity.WARNING, "overlapping-ranges", (),
                            f"ranges of '{variable.name}.{first_name}' and '{variable.name}.{second_name}' overlap"))
            if not self._covers_line([interval for _, interval in intervals]):
                diagnostics.append(Diagnostic(
                    Severity.WARNING, "uncovered-range", (),
                    f"value ranges of '{variable.name}' do not cover every number from MIN to MAX"))
        return diagnostics

    @staticmethod
    def _covers_line(intervals: List[IntervalDomain]) -> bool:
        frontier, covered = Bound.minimum(), True
        remaining = list(intervals)
        while frontier.kind != BoundKind.MAX:
            step = next((interval for interval in remaining
                         if interval.lower == frontier and (covered or interval.lower_inclusive
                                                            or frontier.kind == BoundKind.MIN)), None)
            if step is None:
                return False
            remaining.remove(step)
            frontier, covered = step.upper, step.upper_inclusive or step.upper.kind == BoundKind.MAX
        return True

    def _structure_warnings(self, model, instances, expanded) -> List[Diagnostic]:
        diagnostics = []
        if not model.control_actions:
            diagnostics.append(Diagnostic(Severity.WARNING, "no-control-actions", (),
                                          f"controller '{model.controller}' declares no control actions"))
        if not instances:
            return diagnostics
        for action in model.action_names:
            if not self._by_role(instances, action, RuleRole.DEMAND):
                diagnostics.append(Diagnostic(
                    Severity.WARNING, "never-demanded", (),
                    f"no rule requires '{action}'; its state will be removed as unreachable"))

        seen: Dict[tuple, RuleInstance] = {}
        for instance in sorted(instances, key=lambda i: i.label):
            key = (instance.action, instance.source, instance.kind, expanded[instance.label])
            if key in seen:
                earlier = seen[key]
                diagnostics.append(Diagnostic(
                    Severity.WARNING, "duplicate-context", tuple(sorted({earlier.rule_id, instance.rule_id})),
                    f"{instance.label} repeats the context of {earlier.label}"))
            else:
                seen[key] = instance

        used = {variable for instance in instances for variable, _ in instance.context.assignments}
        for variable in model.process_model:
            if variable.name not in used:
                diagnostics.append(Diagnostic(Severity.WARNING, "unused-variable", (),
                                              f"process-model variable '{variable.name}' is never used in a context"))
        return diagnostics
