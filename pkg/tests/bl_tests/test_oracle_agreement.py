# Copyright (c) 2024 by Jonathan AW

"""
Cross-check of the lasso evaluator against the window-scanning reference evaluator on seeded random formulas and lassos.
"""
# test_oracle_agreement.py

import random

from bl.ltl.evaluator import Lasso, Reaction, eval_lasso
from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFalse, LtlTrue, Next, Not, Or, Release, Sent, Until,
                             VarEq)
from bl.ltl.oracle import eval_oracle
from dal.models import ContextValuation

UNARY = (Not, Next, Globally, Finally)
BINARY = (And, Or, Implies, Until, Release)
VALUES = ("a", "b", "c")


def random_formula(rng: random.Random, size: int):
    if size <= 1 or rng.random() < 0.2:
        choice = rng.randrange(4)
        if choice == 0:
            return VarEq("x", rng.choice(VALUES))
        if choice == 1:
            return Sent(rng.choice(("A", "B")))
        return LtlTrue() if choice == 2 else LtlFalse()
    if rng.random() < 0.4:
        return rng.choice(UNARY)(random_formula(rng, size - 1))
    left = rng.randint(1, size - 1)
    return rng.choice(BINARY)(random_formula(rng, left), random_formula(rng, size - left))


def random_lasso(rng: random.Random) -> Lasso:
    def reaction():
        return Reaction(ContextValuation((("x", rng.choice(VALUES)),)), rng.choice((None, "A", "B")))
    return Lasso(tuple(reaction() for _ in range(rng.randint(0, 4))),
                 tuple(reaction() for _ in range(rng.randint(1, 4))))


def test_evaluator_agrees_with_oracle():
    rng = random.Random(20240611)
    for _ in range(10_000):
        formula = random_formula(rng, rng.randint(1, 9))
        word = random_lasso(rng)
        start = rng.randrange(len(word))
        assert eval_lasso(formula, word, start) == eval_oracle(formula, word, start), (formula.render(), word, start)
