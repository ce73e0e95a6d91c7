# Copyright (c) 2024 by Jonathan AW
# dot_exporter.py
# Summary: Renders a synthesized statechart as GraphViz data in the "dot" language.

from dal.exporters.text_exporter import guard_display
from dal.statechart_models import NO_ACTION, Statechart


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(statechart: Statechart) -> str:
    """
    One node per state in declaration order (the initial state drawn with a double border) and one edge per
    transition labeled with its priority and guard.
    """
    nodes = []
    edges = []
    for state in statechart.states:
        shape = "doublecircle" if state.id == statechart.initial else "circle"
        label = f"{state.id}\\n{state.emits or NO_ACTION}"
        nodes.append(f'{_quote(state.id)} [label="{label}", shape={shape}];')
        for transition in statechart.outgoing(state.id):
            guard = guard_display(transition.guard, statechart.variables)
            edges.append(f"{_quote(transition.source)} -> {_quote(transition.target)} "
                         f"[label={_quote(f'p{transition.priority}: {guard}')}];")

    lines = [f"digraph {_quote(statechart.name)} {{", "\trankdir=LR;"]
    if nodes:
        lines.append("\n\t" + "\n\t".join(nodes))
    if edges:
        lines.append("\n\t" + "\n\t".join(edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
