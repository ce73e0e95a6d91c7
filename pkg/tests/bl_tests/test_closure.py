# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of FormulaClosure:

Objective: Truth vectors settled on a functional graph of reactions agree bit for bit with evaluate_all at every lasso position, for nested temporal formulas where least and greatest fixpoints alternate.
"""
# test_closure.py

from hypothesis import given, settings
from hypothesis import strategies as st

from bl.ltl.closure import FormulaClosure
from bl.ltl.evaluator import Lasso, Reaction, evaluate_all
from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFalse, LtlTrue, Next, Not, Or, Release, Sent, Until,
                             VarEq)
from dal.models import ContextValuation

ATOMS = [VarEq("x", "true"), Sent("CA"), LtlTrue(), LtlFalse()]
X = VarEq("x", "true")
CA = Sent("CA")


def letter(cv: bool, ca: bool) -> Reaction:
    return Reaction(ContextValuation((("x", "true" if cv else "false"),)), "CA" if ca else None)


letters = st.builds(letter, st.booleans(), st.booleans())
lassos = st.builds(Lasso, st.lists(letters, max_size=3).map(tuple), st.lists(letters, min_size=1, max_size=4).map(tuple))
formulas = st.recursive(
    st.sampled_from(ATOMS),
    lambda children: st.one_of(
        st.builds(Not, children), st.builds(Next, children), st.builds(Globally, children),
        st.builds(Finally, children), st.builds(And, children, children), st.builds(Or, children, children),
        st.builds(Implies, children, children), st.builds(Until, children, children),
        st.builds(Release, children, children)),
    max_leaves=10)


def settle_lasso(closure, word):
    successor = [word.successor(position) for position in range(len(word))]
    atoms = [closure.atoms(word[position]) for position in range(len(word))]
    return closure.settle(successor, atoms)


def assert_matches_evaluator(phis, word):
    closure = FormulaClosure(phis)
    vectors = settle_lasso(closure, word)
    for phi in phis:
        assert [closure.holds(vector, phi) for vector in vectors] == evaluate_all(phi, word), phi.render()


def test_shared_subformulas_get_one_bit():
    closure = FormulaClosure([Globally(X), Finally(Globally(X)), X])
    assert len(closure) == 3
    assert closure.tops == (closure.index[Globally(X)], closure.index[Finally(Globally(X))], closure.index[X])
    assert closure.levels == 2


def test_atoms_of_a_reaction():
    closure = FormulaClosure([And(X, CA), LtlTrue()])
    mask = closure.atoms(letter(True, False))
    assert closure.holds(mask, X)
    assert not closure.holds(mask, CA)
    assert closure.holds(mask, LtlTrue())


def test_alternating_fixpoints_on_a_cycle():
    word = Lasso((letter(False, False),), (letter(True, False), letter(False, True), letter(True, True)))
    assert_matches_evaluator([Globally(Finally(CA)), Finally(Globally(CA)), Until(X, Release(CA, X)),
                              Release(Until(CA, X), Finally(And(X, CA))), Next(Next(Next(X)))], word)


def test_settle_covers_tree_nodes():
    # two nodes lead into a self loop
    closure = FormulaClosure([Finally(X), Globally(Not(X)), Next(CA)])
    atoms = [closure.atoms(letter(False, True)), closure.atoms(letter(True, False)), closure.atoms(letter(False, False))]
    vectors = closure.settle([1, 2, 2], atoms)
    assert [closure.holds(vector, Finally(X)) for vector in vectors] == [True, True, False]
    assert [closure.holds(vector, Globally(Not(X))) for vector in vectors] == [False, False, True]
    assert [closure.holds(vector, Next(CA)) for vector in vectors] == [False, False, False]


@settings(max_examples=300, deadline=None)
@given(st.lists(formulas, min_size=1, max_size=4), lassos)
def test_settle_agrees_with_evaluator(phis, word):
    assert_matches_evaluator(phis, word)


# Negative Test Cases

def test__neg_empty_closure():
    closure = FormulaClosure([])
    assert len(closure) == 0
    assert closure.settle([0], [0]) == [0]
