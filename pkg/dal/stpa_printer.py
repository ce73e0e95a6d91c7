# Copyright (c) 2024 by Jonathan AW
# stpa_printer.py
# Summary: Writes an StpaModel back out in the .stpa DSL. parse_stpa(format_model(m)) == m for every model the parser accepts.

from typing import List

from dal.models import (BooleanDomain, IntervalDomain, ProcessModelVariable, SingletonDomain, StpaModel,
                        AbstractValue)

INDENT = "  "


def _format_value(value: AbstractValue) -> str:
    domain = value.domain
    if isinstance(domain, BooleanDomain):
        literal = "true" if domain.value else "false"
        return value.name if value.name == literal else f"{value.name} = {literal}"
    if isinstance(domain, SingletonDomain):
        return f"{value.name} = [{domain.bound}]"
    if isinstance(domain, IntervalDomain):
        opener = "[" if domain.lower_inclusive else "("
        closer = "]" if domain.upper_inclusive else ")"
        return f"{value.name} = {opener}{domain.lower}, {domain.upper}{closer}"
    return value.name


def _format_variable(variable: ProcessModelVariable) -> str:
    values = ", ".join(_format_value(value) for value in variable.values)
    return f"{variable.name}: {{ {values} }}"


def _format_rules(rules, lines: List[str]) -> None:
    for rule in rules:
        lines.append(f"{INDENT * 2}{rule.id} {{ action {rule.action} type {rule.kind.keyword} contexts {{")
        for context in rule.contexts:
            assignments = ", ".join(f"{variable} = {value}" for variable, value in context.assignments)
            lines.append(f"{INDENT * 3}{context.name} [ {assignments} ]")
        lines.append(f"{INDENT * 2}}} }}")


def format_model(model: StpaModel) -> str:
    """
    Render a model in the normative grammar, preserving declaration order.
    """
    lines = [f"controller {model.controller} {{", f"{INDENT}processModel {{"]
    lines.extend(f"{INDENT * 2}{_format_variable(variable)}" for variable in model.process_model)
    lines.append(f"{INDENT}}}")
    lines.append(f"{INDENT}controlActions {{ {', '.join(model.action_names)} }}".replace("{  }", "{ }"))
    lines.append(f"{INDENT}ucas {{")
    _format_rules(model.ucas, lines)
    lines.append(f"{INDENT}}}")
    lines.append(f"{INDENT}dcas {{")
    _format_rules(model.dcas, lines)
    lines.append(f"{INDENT}}}")
    lines.append("}")
    return "\n".join(lines) + "\n"
