# Copyright (c) 2024 by Jonathan AW

"""
Purpose: Tests for the valuation-set helpers behind guards: complement, cube minimization and display formulas. A display formula holds on exactly the valuations of its set.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

from bl.ltl.evaluator import Lasso, Reaction, eval_lasso
from bl.ltl.formulas import And, LtlFalse, LtlTrue, Or, VarEq
from dal.models import AbstractValue, Context, ProcessModelVariable, expand_over
from utils.valuation_utils import complement, display_formula, minimize_cubes

X = ProcessModelVariable("x", (AbstractValue("a"), AbstractValue("b"), AbstractValue("c")))
Y = ProcessModelVariable("y", (AbstractValue("on"), AbstractValue("off")))
VARIABLES = (X, Y)
ALPHABET = sorted(expand_over(VARIABLES, Context("all", (("y", "on"),))) |
                  expand_over(VARIABLES, Context("all", (("y", "off"),))))


def valuations(context: dict):
    return expand_over(VARIABLES, Context("c", tuple(context.items())))


def test_complement():
    inside = valuations({"x": "a"})
    outside = complement(inside, ALPHABET)
    assert len(outside) == 4
    assert outside | inside == frozenset(ALPHABET)
    assert not outside & inside


def test_minimize_cubes_merges_full_variable():
    assert minimize_cubes(valuations({"y": "on"}), VARIABLES) == [(None, "on")]


def test_minimize_cubes_full_alphabet_is_single_free_cube():
    assert minimize_cubes(ALPHABET, VARIABLES) == [(None, None)]


def test_minimize_cubes_empty():
    assert minimize_cubes([], VARIABLES) == []


def test_minimize_cubes_keeps_partial_sets():
    cubes = minimize_cubes(valuations({"x": "a"}) | valuations({"x": "b", "y": "on"}), VARIABLES)
    assert cubes == [("a", None), ("b", "on")]


def test_display_formula():
    assert display_formula(ALPHABET, VARIABLES) == LtlTrue()
    assert display_formula([], VARIABLES) == LtlFalse()
    assert display_formula(valuations({"x": "c", "y": "off"}), VARIABLES) == And(VarEq("x", "c"), VarEq("y", "off"))
    assert display_formula(valuations({"x": "a"}) | valuations({"x": "b", "y": "on"}), VARIABLES) == \
        Or(VarEq("x", "a"), And(VarEq("x", "b"), VarEq("y", "on")))


@settings(max_examples=200, deadline=None)
@given(st.sets(st.sampled_from(ALPHABET)))
def test_display_formula_denotes_exactly_the_input_set(chosen):
    formula = display_formula(chosen, VARIABLES)
    denoted = {valuation for valuation in ALPHABET if eval_lasso(formula, Lasso((), (Reaction(valuation),)))}
    assert denoted == set(chosen)
