# Copyright (c) 2024 by Jonathan AW

"""
Purpose: Helpers for sets of context valuations, the representation of every guard.

- Set algebra is plain frozenset algebra; these helpers add complement over the alphabet and the cube form used for display.
- A cube is a tuple with one entry per process-model variable: a value name, or None when the variable is unconstrained.
"""

from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from bl.ltl.formulas import And, LtlFalse, LtlFormula, LtlTrue, Or, VarEq
from dal.models import ContextValuation, ProcessModelVariable

Cube = Tuple[Optional[str], ...]


def complement(valuations: Iterable[ContextValuation], alphabet: Iterable[ContextValuation]) -> FrozenSet[ContextValuation]:
    return frozenset(alphabet) - frozenset(valuations)


def minimize_cubes(valuations: Iterable[ContextValuation], variables: Sequence[ProcessModelVariable]) -> List[Cube]:
    """
    Merge cubes that differ in exactly one variable and together cover all of its values, until nothing merges.
    Variables are tried in declaration order. The result denotes exactly the input set.
    """
    names = [variable.name for variable in variables]
    cubes = {tuple(valuation[name] for name in names) for valuation in valuations}
    merged = True
    while merged:
        merged = False
        for index, variable in enumerate(variables):
            groups = {}
            for cube in cubes:
                if cube[index] is None:
                    continue
                rest = cube[:index] + (None,) + cube[index + 1:]
                groups.setdefault(rest, set()).add(cube[index])
            for rest, values in groups.items():
                if values == set(variable.value_names):
                    cubes -= {rest[:index] + (value,) + rest[index + 1:] for value in values}
                    cubes.add(rest)
                    merged = True
            if merged:
                break
    return sorted(cubes, key=lambda cube: _cube_key(cube, variables))


def _cube_key(cube: Cube, variables: Sequence[ProcessModelVariable]):
    return tuple(
        len(variable.values) if value is None else variable.value_names.index(value)
        for value, variable in zip(cube, variables)
    )


def cube_atoms(cube: Cube, variables: Sequence[ProcessModelVariable]) -> List[VarEq]:
    return [VarEq(variable.name, value) for value, variable in zip(cube, variables) if value is not None]


def display_formula(valuations: Iterable[ContextValuation], variables: Sequence[ProcessModelVariable]) -> LtlFormula:
    """
    Disjunction of minimized cubes; true for the full alphabet, false for the empty set.
    """
    cubes = minimize_cubes(valuations, variables)
    if not cubes:
        return LtlFalse()
    disjuncts: List[LtlFormula] = []
    for cube in cubes:
        atoms = cube_atoms(cube, variables)
        if not atoms:
            return LtlTrue()
        term: LtlFormula = atoms[0]
        for atom in atoms[1:]:
            term = And(term, atom)
        disjuncts.append(term)
    formula = disjuncts[0]
    for term in disjuncts[1:]:
        formula = Or(formula, term)
    return formula
