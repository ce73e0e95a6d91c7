# Copyright (c) 2024 by Jonathan AW
# formulas.py
# Summary: LTL formula tree over the atoms "variable == value" and "control action sent", with the text rendering embedded in emitted statecharts.
"""
Design Patterns:
1. Composite:
- Every node is a frozen dataclass; unary and binary operators hold their operands, atoms are leaves. Structural equality is what the translation golden tests compare.

2. Encapsulation:
- Rendering lives on the nodes (render()) so every consumer (CLI, exporters, reports) prints formulas the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class LtlTrue:
    def render(self) -> str:
        return "true"


@dataclass(frozen=True)
class LtlFalse:
    def render(self) -> str:
        return "false"


@dataclass(frozen=True)
class VarEq:
    variable: str
    value: str

    def render(self) -> str:
        return f"{self.variable} == {self.value}"


@dataclass(frozen=True)
class Sent:
    action: str

    def render(self) -> str:
        return f"controlAction == {self.action}"


@dataclass(frozen=True)
class Not:
    operand: "LtlFormula"

    def render(self) -> str:
        return f"!({self.operand.render()})"


@dataclass(frozen=True)
class _Binary:
    left: "LtlFormula"
    right: "LtlFormula"

    symbol = "?"

    def render(self) -> str:
        return f"{_wrap(self.left)} {self.symbol} {_wrap(self.right)}"


@dataclass(frozen=True)
class And(_Binary):
    symbol = "&&"


@dataclass(frozen=True)
class Or(_Binary):
    symbol = "||"


@dataclass(frozen=True)
class Implies(_Binary):
    symbol = "->"


@dataclass(frozen=True)
class Until(_Binary):
    symbol = "U"


@dataclass(frozen=True)
class Release(_Binary):
    symbol = "R"


@dataclass(frozen=True)
class _Temporal:
    operand: "LtlFormula"

    symbol = "?"

    def render(self) -> str:
        return f"{self.symbol} ({self.operand.render()})"


@dataclass(frozen=True)
class Next(_Temporal):
    symbol = "X"


@dataclass(frozen=True)
class Globally(_Temporal):
    symbol = "G"


@dataclass(frozen=True)
class Finally(_Temporal):
    symbol = "F"


LtlFormula = Union[LtlTrue, LtlFalse, VarEq, Sent, Not, And, Or, Implies, Until, Release, Next, Globally, Finally]

UNARY = (Not, Next, Globally, Finally)
BINARY = (And, Or, Implies, Until, Release)


def _wrap(formula: LtlFormula) -> str:
    if isinstance(formula, (Not, LtlTrue, LtlFalse)):
        return formula.render()
    return f"({formula.render()})"


def render(formula: LtlFormula) -> str:
    return formula.render()


def subformulas(formula: LtlFormula) -> Iterator[LtlFormula]:
    """Post-order walk; every operand is yielded before the node that uses it."""
    if isinstance(formula, UNARY):
        yield from subformulas(formula.operand)
    elif isinstance(formula, BINARY):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)
    yield formula


def depth(formula: LtlFormula) -> int:
    if isinstance(formula, UNARY):
        return 1 + depth(formula.operand)
    if isinstance(formula, BINARY):
        return 1 + max(depth(formula.left), depth(formula.right))
    return 0
