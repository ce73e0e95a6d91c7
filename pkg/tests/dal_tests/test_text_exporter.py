# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of the annotated statechart text:

Objective: Ensure declarations, states, transitions and @LTL annotations are written in a fixed order, and that guards over ranged values are spelled as comparisons.
"""
# test_text_exporter.py

from dal.exporters.text_exporter import compare_value, emit_textual, guard_display
from dal.statechart_models import Guard

TWO_RULES = ("    r1 { action CA type notProvided contexts {\n      c1 [ x = true ]\n    } }\n"
             "    r2 { action CA type provided contexts {\n      c2 [ x = false ]\n    } }")


# Positive Test Cases

def test_emit_small_machine(synthesis_service, build_model):
    result = synthesis_service.synthesize(build_model(ucas=TWO_RULES))
    text = emit_textual(result.statechart, result.formulas)
    lines = text.splitlines()
    assert lines[0].startswith('@LTL "') and lines[0].endswith('"')
    assert lines[1] == '@LTL "G ((x == false) -> !(controlAction == CA))"'
    assert "\n".join(lines[2:]) + "\n" == (
        "scchart C {\n"
        "  output enum controlAction { none, CA }\n"
        "  internal boolean x\n"
        "\n"
        "  initial state s0 {\n"
        "    entry controlAction = none\n"
        "  }\n"
        "  state s_CA {\n"
        "    entry controlAction = CA\n"
        "  }\n"
        "\n"
        "  s0 -> s_CA priority 1 if x == true\n"
        "  s_CA -> s0 priority 1 if x == false\n"
        "}\n")


def test_emit_skeleton_without_rules(synthesis_service, build_model):
    result = synthesis_service.synthesize(build_model(variables="mode: { idle, busy }"))
    text = emit_textual(result.statechart)
    assert "  internal enum mode { idle, busy }" in text
    assert "->" not in text
    assert text.endswith("  }\n}\n")


def test_emit_acc(acc_result):
    text = emit_textual(acc_result.statechart, acc_result.formulas)
    assert text.count("@LTL") == 12
    assert "  input number desiredSpeed\n  input number minTimeGap\n" in text
    assert "  output enum controlAction { none, stop, accelerate, decelerate }" in text
    assert "  internal number speed\n  internal number timeGap\n" in text
    assert "  s_stop -> s0 priority 3 if speed == desiredSpeed && timeGap >= minTimeGap" in text
    assert "  s_accelerate_belowDesired -> s0 priority 3 if speed == desiredSpeed && timeGap >= minTimeGap" in text
    assert ("  s0 -> s_stop priority 1 if (speed == desiredSpeed && timeGap < minTimeGap) || "
            "(speed < desiredSpeed && timeGap < minTimeGap)") in text
    assert "  s0 -> s_decelerate_aboveDesired priority 3 if speed > desiredSpeed" in text


def test_emit_is_byte_identical(acc_result):
    assert emit_textual(acc_result.statechart, acc_result.formulas) == emit_textual(acc_result.statechart,
                                                                                  acc_result.formulas)


def test_compare_value(acc_model, build_model):
    speed = acc_model.variable("speed")
    assert compare_value(speed, "desiredSpeed") == "speed == desiredSpeed"
    assert compare_value(speed, "lessThanDesiredSpeed") == "speed < desiredSpeed"
    assert compare_value(speed, "greaterThanDesiredSpeed") == "speed > desiredSpeed"
    level = build_model(variables="level: { low = [MIN, 3), mid = [3, 7], high = (7, MAX], any = [MIN, MAX] }")
    variable = level.variable("level")
    assert compare_value(variable, "mid") == "level >= 3 && level <= 7"
    assert compare_value(variable, "any") == "true"
    mode = build_model(variables="mode: { idle, busy }").variable("mode")
    assert compare_value(mode, "busy") == "mode == busy"


def test_guard_display_edges(acc_model):
    variables = acc_model.process_model
    assert guard_display(Guard(), variables) == "false"
    assert guard_display(Guard(acc_model.valuations()), variables) == "true"
