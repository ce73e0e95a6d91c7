# Copyright (c) 2024 by Jonathan AW
# synth.py
# Summary: `sbm synth <file.stpa> -o <out> [--format text|json|dot]` synthesizes the safe behavior model and writes it out.

from pathlib import Path

from bl.services.synthesis_service import SynthesisService
from cli.commands.common import EXIT_OK, load_model
from dal.custom_serializer import emit_json
from dal.exporters.dot_exporter import emit_dot
from dal.exporters.text_exporter import emit_textual

FORMATS = {
    "text": lambda result: emit_textual(result.statechart, result.formulas),
    "json": lambda result: emit_json(result.statechart, result.formulas),
    "dot": lambda result: emit_dot(result.statechart),
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("synth", help="Synthesize a statechart from an STPA model")
    parser.add_argument("model", help="path to the .stpa file")
    parser.add_argument("-o", "--output", required=True, help="file to write (.sbm.txt, .sbm.json or .dot)")
    parser.add_argument("--format", choices=sorted(FORMATS), default="text")
    parser.set_defaults(handler=run)


def run(args, synthesis_service: SynthesisService = None) -> int:
    synthesis_service = synthesis_service or SynthesisService()
    result = synthesis_service.synthesize(load_model(args.model))
    Path(args.output).write_text(FORMATS[args.format](result), encoding="utf-8")
    for note in result.notes:
        print(f"note: {note.rule_id}.{note.context}: {note.message}")
    print(f"{result.statechart.name}: {len(result.statechart.states)} states, "
          f"{len(result.statechart.transitions)} transitions written to {args.output}")
    return EXIT_OK
