# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of SynthesisService:

Objective: Ensure the full pipeline on the ACC sample gives the expected machine, the pipeline order and error handling are respected, and the priority and optimization steps behave as documented.
"""
# test_synthesis_service.py

import pytest

from bl.factories.base_synthesis_rule_factory import BaseSynthesisRuleFactory
from bl.rules.base_rule import RuleResult
from bl.services.synthesis_service import SynthesisService
from dal.models import ContextValuation, RuleRole
from dal.statechart_models import Guard, Statechart, Transition, TransitionKind
from exceptions import ModelValidationException

ACC_STATES = ["s0", "s_stop", "s_accelerate_belowDesired", "s_decelerate_aboveDesired"]
CRUISE_SAFE = ContextValuation((("speed", "desiredSpeed"), ("timeGap", "safe")))


def rule(rule_id, kind, context, action="CA"):
    return f"    {rule_id} {{ action {action} type {kind} contexts {{\n      c [ {context} ]\n    }} }}"


# Positive Test Cases

def test_synthesize_acc_states(acc_result):
    chart = acc_result.statechart
    assert list(chart.state_ids) == ACC_STATES
    assert chart.emits("s_accelerate_belowDesired") == "accelerate"
    assert chart.emits("s_decelerate_aboveDesired") == "decelerate"
    assert chart.reachable() == set(ACC_STATES)


def test_synthesize_acc_transitions(acc_result):
    chart = acc_result.statechart
    assert len(chart.transitions) == 12
    for state_id in ACC_STATES:
        assert [t.priority for t in chart.outgoing(state_id)] == [1, 2, 3]
    back = [t for t in chart.transitions if t.target == "s0"]
    assert {t.source for t in back} == {"s_stop", "s_accelerate_belowDesired", "s_decelerate_aboveDesired"}
    assert all(t.guard == Guard({CRUISE_SAFE}) for t in back)
    assert {t.kind for t in back} == {TransitionKind.FORBID, TransitionKind.ESCAPE}


def test_synthesize_acc_notes_and_formulas(acc_result):
    assert len(acc_result.formulas) == 12
    assert [(note.rule_id, note.context) for note in acc_result.notes] == [("UCA6", "belowDesired")]


def test_stopped_too_soon_reuses_applied_too_long_split(acc_result):
    split = acc_result.statechart.state("s_decelerate_aboveDesired")
    provenance = {label for t in acc_result.statechart.outgoing(split.id) for label in t.provenance}
    assert "UCA9.aboveDesired" in provenance


def test_synthesize_rule_free_model_keeps_skeleton(synthesis_service, build_model):
    result = synthesis_service.synthesize(build_model(actions="CA, B"))
    assert list(result.statechart.state_ids) == ["s0", "s_CA", "s_B"]
    assert result.statechart.transitions == ()
    assert result.formulas == ()


def test_pipeline_order_with_mocked_factory(mocker, validation_service, build_model):
    strategy = mocker.Mock()
    strategy.apply.side_effect = lambda chart, application: RuleResult(chart)
    factory = mocker.Mock(spec=BaseSynthesisRuleFactory)
    factory.load_rule.return_value = strategy
    model = build_model(ucas="\n".join([rule("r1", "tooEarly", "x = true"), rule("r2", "provided", "x = false"),
                                        rule("r3", "notProvided", "x = true")]))
    SynthesisService(validation_service, factory).synthesize(model)
    roles = [call.args[0] for call in factory.load_rule.call_args_list]
    assert roles == [RuleRole.DEMAND, RuleRole.FORBID, RuleRole.TOO_EARLY]
    assert [call.args[1].label for call in strategy.apply.call_args_list] == ["r3.c", "r2.c", "r1.c"]


def test_assign_priorities_orders_kinds_and_refines(synthesis_service, build_model):
    chart = synthesis_service.init_statechart(build_model(actions="CA, B"))
    x_true = ContextValuation((("x", "true"),))
    x_false = ContextValuation((("x", "false"),))
    chart = Statechart(chart.name, chart.states, (
        Transition("s_CA", "s0", Guard({x_true, x_false}), TransitionKind.FORBID, provenance=("a",)),
        Transition("s_CA", "s_B", Guard({x_true}), TransitionKind.DEMAND, provenance=("b",)),
    ), chart.initial, chart.variables, chart.inputs, chart.actions)
    ordered = synthesis_service.assign_priorities(chart, {"a": 0, "b": 1}).outgoing("s_CA")
    assert [(t.target, t.priority, t.guard.valuations) for t in ordered] == [
        ("s_B", 1, {x_true}), ("s0", 2, {x_false})]


def test_optimize_drops_empty_and_unreachable(synthesis_service, build_model):
    chart = synthesis_service.init_statechart(build_model(actions="CA, B"))
    x_true = ContextValuation((("x", "true"),))
    chart = Statechart(chart.name, chart.states, (
        Transition("s0", "s_CA", Guard({x_true}), TransitionKind.DEMAND, priority=2),
        Transition("s0", "s_B", Guard(), TransitionKind.DEMAND, priority=1),
        Transition("s_B", "s_CA", Guard({x_true}), TransitionKind.DEMAND, priority=1),
    ), chart.initial, chart.variables, chart.inputs, chart.actions)
    optimized = synthesis_service.optimize(chart)
    assert list(optimized.state_ids) == ["s0", "s_CA"]
    assert [(t.source, t.target, t.priority) for t in optimized.transitions] == [("s0", "s_CA", 1)]


def test_init_statechart_without_actions(synthesis_service, build_model):
    chart = synthesis_service.init_statechart(build_model(actions=""))
    assert list(chart.state_ids) == ["s0"]
    assert chart.output_symbols == ("none",)


# Negative Test Cases

def test__neg_synthesize_conflicting_model(synthesis_service, build_model):
    model = build_model(ucas=rule("r1", "notProvided", "x = true") + "\n" + rule("r2", "provided", "x = true"))
    with pytest.raises(ModelValidationException) as excinfo:
        synthesis_service.synthesize(model)
    assert [d.code for d in excinfo.value.diagnostics] == ["unsatisfiable-uca-pair"]
