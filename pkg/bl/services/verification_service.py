# Copyright (c) 2024 by Jonathan AW
# verification_service.py
# This file contains the VerificationService class that checks a synthesized machine against its formulas on every input lasso up to a bound.

import itertools
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from bl.ltl.closure import FormulaClosure
from bl.ltl.evaluator import Lasso, Reaction
from bl.ltl.formulas import LtlFormula
from dal.models import ContextValuation, RuleInstance, UcaType, RuleSource
from dal.statechart_models import Statechart
from exceptions import InvalidBoundException
from utils.data_validation import validate_bound
from utils.error_handling import handle_error

logger = logging.getLogger(__name__)

"""
Summary: The VerificationService class decides every generated formula on every input lasso with at most K letters, starting at reaction 1 (reaction 0 is the setup reaction). The answer is the same as running the machine on each lasso of the enumeration and evaluating the trace, including which lasso is reported first.

Design Patterns:
1. Dynamic Programming:
- A lasso is never simulated on its own. For each loop word up to rotation, the machine is run on the product of its states and the loop offsets, and FormulaClosure settles the truth vector of every (state, offset) node at once. Prefixes are then added one letter at a time from the back, keeping per machine state and remaining length only the distinct truth vectors and, for each, the smallest enumeration key (length, prefix length, letters) reaching it.

2. Fan-out:
- With more than one worker the loop words are split by (length, first letter) and settled in a process pool. Partial results are merged by smallest key, so the verdict does not depend on scheduling.

3. Use of Type Annotations:
- Verdict and FormulaVerdict are frozen dataclasses; a machine trace is a Lasso of Reactions carrying state ids.
"""

MachineTrace = Lasso
# (total length, prefix length, letter indices): the position of an input lasso in the enumeration order
LassoKey = Tuple[int, int, Tuple[int, ...]]
VectorKeys = Dict[int, LassoKey]


class FormulaStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_GUARANTEED = "not-guaranteed"


@dataclass(frozen=True)
class FormulaVerdict:
    label: str
    rule_id: str
    kind: str
    formula: LtlFormula
    status: FormulaStatus
    holds: bool
    counterexample: Optional[MachineTrace] = None
    input_lasso: Optional[Lasso] = None


@dataclass(frozen=True)
class Verdict:
    results: Tuple[FormulaVerdict, ...]
    bound: int
    alphabet_size: int
    lasso_count: int

    @property
    def violations(self) -> List[FormulaVerdict]:
        return [result for result in self.results if result.status == FormulaStatus.VIOLATED]

    @property
    def passed(self) -> bool:
        return not self.violations


def is_too_early(instance: RuleInstance) -> bool:
    return instance.source == RuleSource.UCA and instance.kind == UcaType.TOO_EARLY


class TransitionTable:
    """next state and emitted action for every (state, valuation) pair of a machine."""

    def __init__(self, statechart: Statechart):
        self.initial = statechart.initial
        self.emits: Dict[str, Optional[str]] = {state.id: state.emits for state in statechart.states}
        self.next: Dict[Tuple[str, ContextValuation], str] = {}
        alphabet = statechart.alphabet()
        for state in statechart.states:
            for valuation in alphabet:
                self.next[(state.id, valuation)] = statechart.step(state.id, valuation)

    def step(self, state_id: str, valuation: ContextValuation) -> str:
        return self.next[(state_id, valuation)]


def count_input_lassos(alphabet_size: int, max_total: int) -> int:
    return sum(alphabet_size ** (p + l) for p in range(max_total) for l in range(1, max_total - p + 1))


def _input_chunks(max_total: int) -> List[Tuple[int, int]]:
    """(total length, prefix length) pairs in enumeration order."""
    return [(total, prefix) for total in range(1, max_total + 1) for prefix in range(total)]


def _chunk_lassos(alphabet: Sequence[ContextValuation], total: int, prefix: int) -> Iterator[Lasso]:
    for word in itertools.product(alphabet, repeat=total):
        yield Lasso(word[:prefix], word[prefix:])


def enumerate_input_lassos(alphabet: Sequence[ContextValuation], max_total: int) -> Iterator[Lasso]:
    """
    Every (prefix, loop) with |prefix| + |loop| <= max_total and a nonempty loop. Rotations are not merged.
    """
    is_valid, message = validate_bound(max_total)
    if not is_valid:
        handle_error(InvalidBoundException(message), "Cannot enumerate input lassos")
    alphabet = sorted(alphabet)
    for total, prefix in _input_chunks(max_total):
        yield from _chunk_lassos(alphabet, total, prefix)


def run_machine(statechart: Statechart, input_lasso: Lasso, table: Optional[TransitionTable] = None) -> MachineTrace:
    """
    Reaction 0 is the setup reaction (s0, nothing sent, showing the first input). Reaction k + 1 consumes input
    letter k. Simulation stops when (state, loop offset) recurs and the trace is folded there.
    """
    table = table or TransitionTable(statechart)
    prefix_length = len(input_lasso.prefix)
    reactions = [Reaction(input_lasso[0], None, table.initial)]
    seen: Dict[Tuple[str, int], int] = {}
    state = table.initial
    k = 0
    while True:
        if k >= prefix_length:
            key = (state, (k - prefix_length) % len(input_lasso.loop))
            if key in seen:
                start = seen[key] + 1
                return Lasso(tuple(reactions[:start]), tuple(reactions[start:]))
            seen[key] = k
        valuation = input_lasso[k]
        state = table.step(state, valuation)
        reactions.append(Reaction(valuation, table.emits[state], state))
        k += 1


def first_divergence(first: Statechart, second: Statechart, depth: int) -> Optional[Tuple[ContextValuation, ...]]:
    """
    Shortest input word (length <= depth) on which the two machines emit different actions, or None.
    """
    first_table, second_table = TransitionTable(first), TransitionTable(second)
    alphabet = sorted(first.alphabet())
    start = (first.initial, second.initial)
    queue = deque([(start, ())])
    visited = {start}
    while queue:
        (left, right), word = queue.popleft()
        if len(word) >= depth:
            continue
        for valuation in alphabet:
            next_left, next_right = first_table.step(left, valuation), second_table.step(right, valuation)
            extended = word + (valuation,)
            if first_table.emits[next_left] != second_table.emits[next_right]:
                return extended
            if (next_left, next_right) not in visited:
                visited.add((next_left, next_right))
                queue.append(((next_left, next_right), extended))
    return None


def replay_equivalent(first: Statechart, second: Statechart, depth: int) -> bool:
    return first_divergence(first, second, depth) is None



def necklaces(alphabet_size: int, length: int, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Words over range(alphabet_size) that are not larger than any of their rotations, optionally starting with `first`.
    Every word of the given length is a rotation of exactly one of them.
    """
    heads = range(alphabet_size) if first is None else (first,)
    for head in heads:
        for rest in itertools.product(range(alphabet_size), repeat=length - 1):
            word = (head,) + rest
            if all(word <= word[shift:] + word[:shift] for shift in range(1, length)):
                yield word


class _Product:
    """The machine with states and letters as indices: moves[state][letter] = (next state, atoms of that reaction)."""

    def __init__(self, statechart: Statechart, closure: FormulaClosure):
        table = TransitionTable(statechart)
        self.alphabet = sorted(statechart.alphabet())
        state_ids = statechart.state_ids
        position = {state_id: index for index, state_id in enumerate(state_ids)}
        self.initial = position[table.initial]
        self.moves: List[List[Tuple[int, int]]] = []
        for state_id in state_ids:
            row = []
            for valuation in self.alphabet:
                target = table.step(state_id, valuation)
                row.append((position[target], closure.atoms(Reaction(valuation, table.emits[target]))))
            self.moves.append(row)

    def loop_vectors(self, closure: FormulaClosure, word: Tuple[int, ...]) -> List[int]:
        """Vector of node state * |word| + offset: reading rot(word, offset) forever from that state."""
        length = len(word)
        successor, atoms = [], []
        for row in self.moves:
            for offset, letter in enumerate(word):
                target, mask = row[letter]
                successor.append(target * length + (offset + 1) % length)
                atoms.append(mask)
        return closure.settle(successor, atoms)


def _keep_smallest(bucket: VectorKeys, vector: int, key: LassoKey) -> None:
    known = bucket.get(vector)
    if known is None or key < known:
        bucket[vector] = key


def _loop_keys(statechart: Statechart, formulas: Tuple[LtlFormula, ...],
               chunks: List[Tuple[int, int]]) -> Dict[Tuple[int, int], VectorKeys]:
    """For every (state, loop length): the vectors reached by reading a loop word forever, with their smallest key."""
    closure = FormulaClosure(formulas)
    product = _Product(statechart, closure)
    found: Dict[Tuple[int, int], VectorKeys] = {}
    for length, first in chunks:
        for word in necklaces(len(product.alphabet), length, first):
            vectors = product.loop_vectors(closure, word)
            for state in range(len(product.moves)):
                bucket = found.setdefault((state, length), {})
                for offset in range(length):
                    _keep_smallest(bucket, vectors[state * length + offset],
                                   (length, 0, word[offset:] + word[:offset]))
    return found


def _lasso_keys(closure: FormulaClosure, product: _Product, loops: Dict[Tuple[int, int], VectorKeys],
                bound: int) -> VectorKeys:
    """Vectors at reaction 1 over all input lassos with at most `bound` letters, with their smallest key."""
    states = range(len(product.moves))
    reach: List[VectorKeys] = [{} for _ in states]
    for budget in range(1, bound + 1):
        layer = []
        for state in states:
            bucket: VectorKeys = {}
            for length in range(1, budget + 1):
                for vector, key in loops.get((state, length), {}).items():
                    _keep_smallest(bucket, vector, key)
            for letter, (target, atoms) in enumerate(product.moves[state]):
                for vector, (total, prefix, word) in reach[target].items():
                    _keep_smallest(bucket, closure.step(atoms, vector), (total + 1, prefix + 1, (letter,) + word))
            layer.append(bucket)
        reach = layer
    return reach[product.initial]


def _loop_chunks(alphabet_size: int, bound: int) -> List[Tuple[int, int]]:
    """(loop length, first letter) pairs."""
    return [(length, first) for length in range(1, bound + 1) for first in range(alphabet_size)]


class VerificationService:
    """
    Service class checking a machine against formulas on all input lassos up to a bound.
    """

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)

    def run_machine(self, statechart: Statechart, input_lasso: Lasso) -> MachineTrace:
        return run_machine(statechart, input_lasso)

    def _loops(self, statechart: Statechart, formulas: Tuple[LtlFormula, ...],
               chunks: List[Tuple[int, int]]) -> Dict[Tuple[int, int], VectorKeys]:
        if self.workers == 1 or len(chunks) == 1:
            return _loop_keys(statechart, formulas, chunks)
        groups = [chunks[index::self.workers] for index in range(self.workers)]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(_loop_keys, statechart, formulas, group) for group in groups if group]
            partials = [future.result() for future in futures]
        merged: Dict[Tuple[int, int], VectorKeys] = {}
        for partial in partials:
            for node, keys in partial.items():
                bucket = merged.setdefault(node, {})
                for vector, key in keys.items():
                    _keep_smallest(bucket, vector, key)
        return merged

    def check(self, statechart: Statechart, formulas: Sequence[Tuple[RuleInstance, LtlFormula]],
              bound: int) -> Verdict:
        is_valid, message = validate_bound(bound)
        if not is_valid:
            handle_error(InvalidBoundException(message), "Cannot verify")
        only_formulas = tuple(formula for _, formula in formulas)
        closure = FormulaClosure(only_formulas)
        product = _Product(statechart, closure)
        alphabet_size = len(product.alphabet)
        loops = self._loops(statechart, only_formulas, _loop_chunks(alphabet_size, bound))
        reached = _lasso_keys(closure, product, loops, bound)
        logger.debug("%s: %d distinct truth vectors at reaction 1", statechart.name, len(reached))

        table = TransitionTable(statechart)
        results = []
        for (instance, formula), top in zip(formulas, closure.tops):
            failing = [key for vector, key in reached.items() if not vector >> top & 1]
            input_lasso = None
            if failing:
                _, prefix, word = min(failing)
                letters = [product.alphabet[letter] for letter in word]
                input_lasso = Lasso(tuple(letters[:prefix]), tuple(letters[prefix:]))
            holds = input_lasso is None
            if is_too_early(instance):
                status = FormulaStatus.NOT_GUARANTEED
            else:
                status = FormulaStatus.HOLDS if holds else FormulaStatus.VIOLATED
            counterexample = run_machine(statechart, input_lasso, table) if input_lasso else None
            results.append(FormulaVerdict(instance.label, instance.rule_id, instance.kind.value, formula, status,
                                          holds, counterexample, input_lasso))
        total = count_input_lassos(alphabet_size, bound)
        verdict = Verdict(tuple(results), bound, alphabet_size, total)
        logger.info("Checked %s on %d lassos (bound %d): %d violation(s)", statechart.name, total, bound,
                    len(verdict.violations))
        return verdict
