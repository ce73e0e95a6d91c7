# Copyright (c) 2024 by Jonathan AW
# oracle.py
# Summary: Independent reference evaluator used by the tests to cross-check eval_lasso.
# Temporal operators are resolved by scanning witnesses in a window of |prefix| + 2 * |loop| positions, which visits every position reachable from the start at least once.

from typing import Dict, Tuple

from bl.ltl.evaluator import Lasso, _atom_truth, _check_start
from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFormula, Next, Not, Or, Release, Until)


def eval_oracle(formula: LtlFormula, lasso: Lasso, start: int = 0) -> bool:
    _check_start(lasso, start)
    prefix_length, loop_length = len(lasso.prefix), len(lasso.loop)
    window = prefix_length + 2 * loop_length
    memo: Dict[Tuple[LtlFormula, int], bool] = {}

    def normalize(k: int) -> int:
        if k < len(lasso):
            return k
        return prefix_length + (k - prefix_length) % loop_length

    def holds(node: LtlFormula, k: int) -> bool:
        position = normalize(k)
        key = (node, position)
        if key not in memo:
            memo[key] = compute(node, position)
        return memo[key]

    def compute(node: LtlFormula, i: int) -> bool:
        if isinstance(node, Not):
            return not holds(node.operand, i)
        if isinstance(node, And):
            return holds(node.left, i) and holds(node.right, i)
        if isinstance(node, Or):
            return holds(node.left, i) or holds(node.right, i)
        if isinstance(node, Implies):
            return (not holds(node.left, i)) or holds(node.right, i)
        if isinstance(node, Next):
            return holds(node.operand, i + 1)
        if isinstance(node, Finally):
            return any(holds(node.operand, j) for j in range(i, i + window))
        if isinstance(node, Globally):
            return all(holds(node.operand, j) for j in range(i, i + window))
        if isinstance(node, Until):
            for j in range(i, i + window):
                if holds(node.right, j):
                    return True
                if not holds(node.left, j):
                    return False
            return False
        if isinstance(node, Release):
            for j in range(i, i + window):
                if not holds(node.right, j):
                    return False
                if holds(node.left, j):
                    return True
            return True
        return _atom_truth(node)(lasso[i])

    return holds(formula, start)
