# Copyright (c) 2024 by Jonathan AW
# text_exporter.py
# Summary: Renders a synthesized statechart as annotated flat statechart text (.sbm.txt).

"""
Design Patterns:
1. Template Rendering:
- emit_textual writes fixed sections in a fixed order: LTL annotations, declarations, states, transitions. Everything is iterated in declaration order, so the output is byte-identical across runs.

2. Separation of Concerns:
- Guards are stored as valuation sets; this module only decides how the atoms of their display formula are spelled, turning abstract values of ranged variables back into comparisons.
"""

from typing import List, Sequence, Tuple

from bl.ltl.formulas import And, LtlFalse, LtlFormula, LtlTrue, Or
from dal.models import (BooleanDomain, IntervalDomain, ProcessModelVariable, RuleInstance, SingletonDomain)
from dal.statechart_models import NO_ACTION, Guard, Statechart
from utils.valuation_utils import display_formula

INDENT = "  "


def compare_value(variable: ProcessModelVariable, value_name: str) -> str:
    """
    Concrete condition for `variable == value_name`. Ranged values become comparisons against their bounds;
    a range open on both sides is `true`.
    """
    domain = variable.value(value_name).domain
    name = variable.name
    if isinstance(domain, BooleanDomain):
        return f"{name} == {'true' if domain.value else 'false'}"
    if isinstance(domain, SingletonDomain):
        return f"{name} == {domain.bound}"
    if isinstance(domain, IntervalDomain):
        parts = []
        if not domain.lower.is_unbounded:
            parts.append(f"{name} {'>=' if domain.lower_inclusive else '>'} {domain.lower}")
        if not domain.upper.is_unbounded:
            parts.append(f"{name} {'<=' if domain.upper_inclusive else '<'} {domain.upper}")
        return " && ".join(parts) if parts else "true"
    return f"{name} == {value_name}"


def _flatten(formula: LtlFormula, operator) -> List[LtlFormula]:
    if isinstance(formula, operator):
        return _flatten(formula.left, operator) + _flatten(formula.right, operator)
    return [formula]


def guard_display(guard: Guard, variables: Sequence[ProcessModelVariable]) -> str:
    """
    The guard's display formula with every `variable == value` atom spelled by compare_value.
    """
    formula = display_formula(guard.valuations, variables)
    if isinstance(formula, (LtlTrue, LtlFalse)):
        return formula.render()
    by_name = {variable.name: variable for variable in variables}
    terms: List[Tuple[str, int]] = []
    for term in _flatten(formula, Or):
        comparisons = [compare_value(by_name[atom.variable], atom.value) for atom in _flatten(term, And)]
        comparisons = [condition for condition in comparisons if condition != "true"]
        if not comparisons:
            return "true"
        text = " && ".join(comparisons)
        terms.append((text, text.count("&&")))
    if len(terms) == 1:
        return terms[0][0]
    return " || ".join(f"({text})" if conjunctions else text for text, conjunctions in terms)


def _declarations(statechart: Statechart) -> List[str]:
    lines = [f"{INDENT}input number {name}" for name in statechart.inputs]
    lines.append(f"{INDENT}output enum controlAction {{ {', '.join(statechart.output_symbols)} }}")
    for variable in statechart.variables:
        kind = variable.concrete_type
        if kind == "enum":
            lines.append(f"{INDENT}internal enum {variable.name} {{ {', '.join(variable.value_names)} }}")
        else:
            lines.append(f"{INDENT}internal {kind} {variable.name}")
    return lines


def _states(statechart: Statechart) -> List[str]:
    lines = []
    for state in statechart.states:
        keyword = "initial state" if state.id == statechart.initial else "state"
        lines.append(f"{INDENT}{keyword} {state.id} {{")
        lines.append(f"{INDENT * 2}entry controlAction = {state.emits or NO_ACTION}")
        lines.append(f"{INDENT}}}")
    return lines


def _transitions(statechart: Statechart) -> List[str]:
    lines = []
    for state in statechart.states:
        for transition in statechart.outgoing(state.id):
            lines.append(f"{INDENT}{transition.source} -> {transition.target} priority {transition.priority} "
                         f"if {guard_display(transition.guard, statechart.variables)}")
    return lines


def emit_textual(statechart: Statechart, formulas: Sequence[Tuple[RuleInstance, LtlFormula]] = ()) -> str:
    lines = [f'@LTL "{formula.render()}"' for _, formula in formulas]
    lines.append(f"scchart {statechart.name} {{")
    lines += _declarations(statechart)
    lines.append("")
    lines += _states(statechart)
    transitions = _transitions(statechart)
    if transitions:
        lines.append("")
        lines += transitions
    lines.append("}")
    return "\n".join(lines) + "\n"
