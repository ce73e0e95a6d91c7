# Copyright (c) 2024 by Jonathan AW
# closure.py
# Summary: Bit-vector evaluation of a set of formulas one reaction at a time, used by the verifier to evaluate many lassos that share reactions.
"""
Design Patterns:
1. Compilation:
- The subformulas of all formulas are numbered once, operands before the nodes using them, and each gets one bit. A truth vector is an int holding the value of every subformula at one reaction.

2. Memoization:
- step(atoms, following) gives the vector at a reaction from the atoms true there and the vector at the next reaction. Results are cached per argument pair.

3. Levels:
- Atoms and boolean nodes over them sit at level 0; a temporal operator sits one level above its deepest operand. Cycles are closed one level at a time, see settle_cycle.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from bl.ltl.evaluator import Reaction, _atom_truth
from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFormula, Next, Not, Or, Release, Until, subformulas)

_NOT, _AND, _OR, _IMPLIES, _NEXT, _GLOBALLY, _FINALLY, _UNTIL, _RELEASE = range(9)

_OPCODES = {Not: _NOT, And: _AND, Or: _OR, Implies: _IMPLIES, Next: _NEXT, Globally: _GLOBALLY,
            Finally: _FINALLY, Until: _UNTIL, Release: _RELEASE}
_TEMPORAL = (_NEXT, _GLOBALLY, _FINALLY, _UNTIL, _RELEASE)


class FormulaClosure:
    """
    All subformulas of a formula list, with one bit each.
    """

    def __init__(self, formulas: Sequence[LtlFormula]):
        self.index: Dict[LtlFormula, int] = {}
        self._atoms = []
        self._program: List[Tuple[int, int, int, int]] = []
        level: List[int] = []
        for formula in formulas:
            for node in subformulas(formula):
                if node in self.index:
                    continue
                bit = len(level)
                self.index[node] = bit
                opcode = _OPCODES.get(type(node))
                if opcode is None:
                    self._atoms.append((bit, _atom_truth(node)))
                    level.append(0)
                    continue
                if hasattr(node, "operand"):
                    left = right = self.index[node.operand]
                else:
                    left, right = self.index[node.left], self.index[node.right]
                level.append(max(level[left], level[right]) + (1 if opcode in _TEMPORAL else 0))
                self._program.append((opcode, bit, left, right))
        self.tops: Tuple[int, ...] = tuple(self.index[formula] for formula in formulas)
        self.levels = max(level, default=0)
        # fixpoint bits at level >= k are cleared (Until, Finally) or set (Release, Globally) on the cycle boundary
        self._clear = [0] * (self.levels + 1)
        self._set = [0] * (self.levels + 1)
        for opcode, bit, _, _ in self._program:
            if opcode in (_NOT, _AND, _OR, _IMPLIES, _NEXT):
                continue
            for k in range(1, level[bit] + 1):
                self._clear[k] |= 1 << bit
                if opcode in (_GLOBALLY, _RELEASE):
                    self._set[k] |= 1 << bit
        self._memo: Dict[Tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.index)

    def holds(self, vector: int, formula: LtlFormula) -> bool:
        return bool(vector >> self.index[formula] & 1)

    def atoms(self, reaction: Reaction) -> int:
        mask = 0
        for bit, truth in self._atoms:
            if truth(reaction):
                mask |= 1 << bit
        return mask

    def step(self, atoms: int, following: int) -> int:
        key = (atoms, following)
        vector = self._memo.get(key)
        if vector is None:
            vector = self._memo[key] = self._compute(atoms, following)
        return vector

    def _compute(self, vector: int, following: int) -> int:
        for opcode, bit, left, right in self._program:
            if opcode == _NOT:
                value = not vector >> left & 1
            elif opcode == _AND:
                value = vector >> left & 1 and vector >> right & 1
            elif opcode == _OR:
                value = vector >> left & 1 or vector >> right & 1
            elif opcode == _IMPLIES:
                value = not vector >> left & 1 or vector >> right & 1
            elif opcode == _NEXT:
                value = following >> left & 1
            elif opcode == _GLOBALLY:
                value = vector >> left & 1 and following >> bit & 1
            elif opcode == _FINALLY:
                value = vector >> left & 1 or following >> bit & 1
            elif opcode == _UNTIL:
                value = vector >> right & 1 or (vector >> left & 1 and following >> bit & 1)
            else:
                value = vector >> right & 1 and (vector >> left & 1 or following >> bit & 1)
            if value:
                vector |= 1 << bit
        return vector

    def reset(self, vector: int, level: int) -> int:
        return (vector & ~self._clear[level]) | self._set[level]

    def settle_cycle(self, cycle: Sequence[int]) -> List[int]:
        """
        Exact vectors around a cycle of reactions given by their atom masks; the last reaction is followed by the first.
        Stage k starts from the first vector with the fixpoint bits of level >= k reset, so after its backward pass
        every bit below level k is exact everywhere and level k is exact at the first reaction. A last pass without
        reset makes all of them exact.
        """
        size = len(cycle)
        vectors = [0] * size
        vectors[0] = self.step(cycle[0], 0)
        for stage in range(1, self.levels + 2):
            following = self.reset(vectors[0], stage) if stage <= self.levels else vectors[0]
            for position in range(size - 1, -1, -1):
                following = vectors[position] = self.step(cycle[position], following)
        return vectors

    def settle(self, successor: Sequence[int], atoms: Sequence[int]) -> List[int]:
        """
        Exact vectors on every node of a functional graph: node i is a reaction with atom mask atoms[i],
        followed by reaction successor[i].
        """
        vectors: List[Optional[int]] = [None] * len(successor)
        for start in range(len(successor)):
            if vectors[start] is not None:
                continue
            path: List[int] = []
            on_path: Dict[int, int] = {}
            node = start
            while vectors[node] is None and node not in on_path:
                on_path[node] = len(path)
                path.append(node)
                node = successor[node]
            if vectors[node] is None:
                entry = on_path[node]
                cycle = path[entry:]
                for member, vector in zip(cycle, self.settle_cycle([atoms[member] for member in cycle])):
                    vectors[member] = vector
                path = path[:entry]
            for member in reversed(path):
                vectors[member] = self.step(atoms[member], vectors[successor[member]])
        return vectors
