# Copyright (c) 2024 by Jonathan AW
# verify.py
# Summary: `sbm verify <file.stpa> [--bound K] [--report out.json]` synthesizes the model and checks it against every generated formula.

from pathlib import Path

from bl.services.synthesis_service import SynthesisService
from bl.services.verification_service import FormulaStatus, VerificationService
from cli.commands.common import EXIT_FAILED, EXIT_OK, format_trace, load_model
from config import get_config
from dal.custom_serializer import verdict_to_json


def register(subparsers) -> None:
    config = get_config()
    parser = subparsers.add_parser("verify", help="Synthesize, then check every formula on all input lassos up to a bound")
    parser.add_argument("model", help="path to the .stpa file")
    parser.add_argument("--bound", type=int, default=config.DEFAULT_BOUND,
                        help=f"maximum prefix plus loop length of the input lassos (default {config.DEFAULT_BOUND})")
    parser.add_argument("--workers", type=int, default=config.VERIFY_WORKERS, help="worker processes")
    parser.add_argument("--report", help="write a JSON report to this file")
    parser.set_defaults(handler=run)


def run(args, synthesis_service: SynthesisService = None, verification_service: VerificationService = None) -> int:
    synthesis_service = synthesis_service or SynthesisService()
    verification_service = verification_service or VerificationService(args.workers)
    result = synthesis_service.synthesize(load_model(args.model))
    verdict = verification_service.check(result.statechart, result.formulas, args.bound)

    for entry in verdict.results:
        print(f"{entry.status.value:<15} {entry.label}: {entry.formula.render()}")
        if entry.status == FormulaStatus.VIOLATED:
            print(format_trace(entry.counterexample))
    print(f"{result.statechart.name}: {verdict.lasso_count} input lassos up to length {verdict.bound}, "
          f"{len(verdict.violations)} violation(s)")
    if args.report:
        Path(args.report).write_text(verdict_to_json(result.statechart, verdict), encoding="utf-8")
    return EXIT_OK if verdict.passed else EXIT_FAILED
