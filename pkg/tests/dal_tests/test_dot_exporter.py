# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of the GraphViz export:

Objective: One node per state and one labeled edge per transition, in a stable layout.
"""
# test_dot_exporter.py

from dal.exporters.dot_exporter import emit_dot


def test_emit_dot_small_machine(synthesis_service, build_model):
    model = build_model(ucas="    r1 { action CA type notProvided contexts {\n      c1 [ x = true ]\n    } }")
    result = synthesis_service.synthesize(model)
    assert emit_dot(result.statechart) == (
        'digraph "C" {\n'
        '\trankdir=LR;\n'
        '\n\t"s0" [label="s0\\nnone", shape=doublecircle];'
        '\n\t"s_CA" [label="s_CA\\nCA", shape=circle];\n'
        '\n\t"s0" -> "s_CA" [label="p1: x == true"];\n'
        '}\n')


def test_emit_dot_acc(acc_result):
    dot = emit_dot(acc_result.statechart)
    assert dot.count("shape=") == 4
    assert dot.count(" -> ") == 12
    assert dot.count("doublecircle") == 1
    assert '"s_stop" -> "s0" [label="p3: speed == desiredSpeed && timeGap >= minTimeGap"];' in dot


def test_emit_dot_without_transitions(synthesis_service, build_model):
    dot = emit_dot(synthesis_service.synthesize(build_model()).statechart)
    assert " -> " not in dot
    assert dot.startswith('digraph "C" {\n\trankdir=LR;\n')
