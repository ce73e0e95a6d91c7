# Copyright (c) 2024 by Jonathan AW
# validate.py
# Summary: `sbm validate <file.stpa>` prints the model's diagnostics; exit 1 when any of them is an ERROR.

from bl.services.validation_service import ValidationService
from cli.commands.common import EXIT_FAILED, EXIT_OK, load_model


def register(subparsers) -> None:
    parser = subparsers.add_parser("validate", help="Check an STPA model for conflicting or incomplete rules")
    parser.add_argument("model", help="path to the .stpa file")
    parser.set_defaults(handler=run)


def run(args, validation_service: ValidationService = None) -> int:
    validation_service = validation_service or ValidationService()
    model = load_model(args.model)
    diagnostics = validation_service.validate(model)
    for diagnostic in diagnostics:
        print(diagnostic)
    if not diagnostics:
        print(f"{model.controller}: no findings")
    return EXIT_FAILED if validation_service.has_errors(diagnostics) else EXIT_OK
