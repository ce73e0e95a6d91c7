# Copyright (c) 2024 by Jonathan AW
# simulate.py
# Summary: `sbm simulate <file.sbm.json> --inputs <trace>` steps a synthesized machine on a scripted valuation sequence.

from bl.services.verification_service import VerificationService
from cli.commands.common import EXIT_OK, format_trace, read_text
from dal.custom_serializer import parse_json
from dal.trace_reader import read_trace


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Run a synthesized machine on an input trace")
    parser.add_argument("machine", help="path to the .sbm.json file written by synth --format json")
    parser.add_argument("--inputs", required=True, help="trace file: var=value pairs per line, optional loop: line")
    parser.set_defaults(handler=run)


def run(args, verification_service: VerificationService = None) -> int:
    verification_service = verification_service or VerificationService()
    statechart, _ = parse_json(read_text(args.machine))
    inputs = read_trace(read_text(args.inputs), statechart.variables)
    print(format_trace(verification_service.run_machine(statechart, inputs)))
    return EXIT_OK
