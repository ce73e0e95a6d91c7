# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of the statechart model:

Objective: Ensure the queries the services rely on (outgoing order, the transition taken, reachability, determinism) behave as documented.
"""
# test_statechart_models.py

import pytest

from dal.models import AbstractValue, BooleanDomain, ContextValuation, ProcessModelVariable
from dal.statechart_models import (INITIAL_STATE, Guard, State, StateOrigin, Statechart, Transition,
                                   TransitionKind)
from exceptions import NondeterministicStatechartException

X = ProcessModelVariable("x", (AbstractValue("true", BooleanDomain(True)), AbstractValue("false", BooleanDomain(False))))
X_TRUE = ContextValuation((("x", "true"),))
X_FALSE = ContextValuation((("x", "false"),))


def machine(*transitions):
    states = (State(INITIAL_STATE, None, StateOrigin.INITIAL), State("s_CA", "CA"), State("s_B", "B"))
    return Statechart("C", states, transitions, variables=(X,), actions=("CA", "B"))


# Positive Test Cases

def test_outgoing_sorted_by_priority():
    low = Transition("s0", "s_B", Guard({X_FALSE}), TransitionKind.DEMAND, priority=2)
    high = Transition("s0", "s_CA", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1)
    chart = machine(low, high)
    assert chart.outgoing("s0") == [high, low]
    assert chart.incoming("s_B") == [low]


def test_take_and_step():
    chart = machine(Transition("s0", "s_CA", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1))
    assert chart.take("s0", X_TRUE).target == "s_CA"
    assert chart.take("s0", X_FALSE) is None
    assert chart.step("s0", X_FALSE) == "s0"
    assert chart.step("s0", X_TRUE) == "s_CA"


def test_take_prefers_higher_priority():
    first = Transition("s0", "s_CA", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1)
    second = Transition("s0", "s_B", Guard({X_TRUE, X_FALSE}), TransitionKind.DEMAND, priority=2)
    chart = machine(first, second)
    assert chart.step("s0", X_TRUE) == "s_CA"
    assert chart.step("s0", X_FALSE) == "s_B"
    # overlapping stored guards are reported even though priorities resolve them
    assert not chart.is_deterministic()
    assert chart.determinism_violations()[0][:2] == ("s0", X_TRUE)


def test_reachable_and_alphabet():
    chart = machine(Transition("s0", "s_CA", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1))
    assert chart.reachable() == {"s0", "s_CA"}
    assert chart.alphabet() == (X_TRUE, X_FALSE)
    assert chart.output_symbols == ("none", "CA", "B")
    assert chart.base_state_id("B") == "s_B"


def test_guard_algebra():
    guard = Guard({X_TRUE})
    assert guard.union({X_FALSE}).valuations == {X_TRUE, X_FALSE}
    assert guard.minus({X_TRUE}).is_empty
    assert guard.intersection({X_TRUE, X_FALSE}) == guard
    assert guard.enabled(X_TRUE) and not guard.enabled(X_FALSE)


def test_acc_is_deterministic(acc_result):
    assert acc_result.statechart.is_deterministic()


# Negative Test Cases

def test__neg_take_same_priority():
    first = Transition("s0", "s_CA", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1)
    second = Transition("s0", "s_B", Guard({X_TRUE}), TransitionKind.DEMAND, priority=1)
    with pytest.raises(NondeterministicStatechartException):
        machine(first, second).take("s0", X_TRUE)
