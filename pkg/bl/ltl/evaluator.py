# Copyright (c) 2024 by Jonathan AW
# evaluator.py
# Summary: Exact LTL evaluation on lasso words (a finite prefix followed by a loop repeated forever).
"""
Design Patterns:
1. Value Objects:
- Reaction and Lasso are frozen dataclasses. A Lasso is generic over its letters; the verifier uses it both for input valuations and for machine reactions.

2. Dynamic Programming:
- eval_lasso computes, for every subformula bottom-up, its truth value at every lasso position. Positions inside the loop are closed by fixpoint iteration: Until starts from False (least fixpoint), Release from True (greatest fixpoint), and |loop| + 1 backward passes settle both.

3. Error Handling:
- Out-of-range start positions raise LassoIndexException; an empty loop raises InvalidLassoException at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFalse, LtlFormula, LtlTrue, Next, Not, Or, Release,
                             Sent, Until, VarEq, subformulas)
from dal.models import ContextValuation
from exceptions import InvalidLassoException, LassoIndexException


@dataclass(frozen=True)
class Reaction:
    """Observable part of one reaction. state is only filled in for machine traces."""
    valuation: ContextValuation
    sent: Optional[str] = None
    state: Optional[str] = None


@dataclass(frozen=True)
class Lasso:
    prefix: Tuple[Any, ...]
    loop: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "loop", tuple(self.loop))
        if not self.loop:
            raise InvalidLassoException("A lasso needs a nonempty loop")

    def __len__(self) -> int:
        return len(self.prefix) + len(self.loop)

    def __getitem__(self, position: int) -> Any:
        if position < len(self.prefix):
            return self.prefix[position]
        return self.loop[(position - len(self.prefix)) % len(self.loop)]

    def successor(self, position: int) -> int:
        following = position + 1
        return following if following < len(self) else len(self.prefix)

    def unroll(self, times: int) -> Lasso:
        """Same infinite word with the loop copied `times` more times into the prefix."""
        return Lasso(self.prefix + self.loop * times, self.loop)

    def rotate(self) -> Lasso:
        """Same infinite word with the first loop letter moved into the prefix and the loop shifted by one."""
        return Lasso(self.prefix + self.loop[:1], self.loop[1:] + self.loop[:1])


def _atom_truth(formula: LtlFormula) -> Callable[[Reaction], bool]:
    if isinstance(formula, LtlTrue):
        return lambda reaction: True
    if isinstance(formula, LtlFalse):
        return lambda reaction: False
    if isinstance(formula, VarEq):
        return lambda reaction: reaction.valuation[formula.variable] == formula.value
    if isinstance(formula, Sent):
        return lambda reaction: reaction.sent == formula.action
    raise TypeError(f"Not an atom: {formula!r}")


def _check_start(lasso: Lasso, start: int) -> None:
    if not 0 <= start < len(lasso):
        raise LassoIndexException(f"Start position {start} outside lasso of length {len(lasso)}")


def _fixpoint(lasso: Lasso, step: Callable[[int, List[bool]], bool], initial: bool) -> List[bool]:
    size, loop_start = len(lasso), len(lasso.prefix)
    values = [initial] * size
    for _ in range(len(lasso.loop) + 1):
        for position in range(size - 1, loop_start - 1, -1):
            values[position] = step(position, values)
    for position in range(loop_start - 1, -1, -1):
        values[position] = step(position, values)
    return values


def evaluate_all(formula: LtlFormula, lasso: Lasso) -> List[bool]:
    """
    Truth of `formula` at every position of the lasso.
    """
    size = len(lasso)
    table: Dict[LtlFormula, List[bool]] = {}
    succ = [lasso.successor(position) for position in range(size)]
    for node in subformulas(formula):
        if node in table:
            continue
        if isinstance(node, Not):
            inner = table[node.operand]
            table[node] = [not value for value in inner]
        elif isinstance(node, (And, Or, Implies)):
            left, right = table[node.left], table[node.right]
            if isinstance(node, And):
                table[node] = [a and b for a, b in zip(left, right)]
            elif isinstance(node, Or):
                table[node] = [a or b for a, b in zip(left, right)]
            else:
                table[node] = [(not a) or b for a, b in zip(left, right)]
        elif isinstance(node, Next):
            inner = table[node.operand]
            table[node] = [inner[succ[position]] for position in range(size)]
        elif isinstance(node, (Until, Finally)):
            left = table[node.left] if isinstance(node, Until) else [True] * size
            right = table[node.right] if isinstance(node, Until) else table[node.operand]
            table[node] = _fixpoint(
                lasso, lambda i, v: right[i] or (left[i] and v[succ[i]]), initial=False)
        elif isinstance(node, (Release, Globally)):
            left = table[node.left] if isinstance(node, Release) else [False] * size
            right = table[node.right] if isinstance(node, Release) else table[node.operand]
            table[node] = _fixpoint(
                lasso, lambda i, v: right[i] and (left[i] or v[succ[i]]), initial=True)
        else:
            truth = _atom_truth(node)
            table[node] = [truth(lasso[position]) for position in range(size)]
    return table[formula]


def eval_lasso(formula: LtlFormula, lasso: Lasso, start: int = 0) -> bool:
    """
    Exact truth of `formula` on prefix . loop^omega at position `start`.
    """
    _check_start(lasso, start)
    return evaluate_all(formula, lasso)[start]
