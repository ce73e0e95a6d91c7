# Copyright (c) 2024 by Jonathan AW
# ltl.py
# Summary: `sbm ltl <file.stpa> [--json]` prints the LTL formula generated for every rule instance.

import sys

from bl.ltl.translation import translate_model
from cli.commands.common import EXIT_OK, load_model
from dal.custom_serializer import formulas_to_json


def register(subparsers) -> None:
    parser = subparsers.add_parser("ltl", help="Print the LTL formulas generated from the UCA and DCA rules")
    parser.add_argument("model", help="path to the .stpa file")
    parser.add_argument("--json", action="store_true", help="print a JSON array instead of text lines")
    parser.set_defaults(handler=run)


def run(args) -> int:
    formulas = translate_model(load_model(args.model))
    if args.json:
        sys.stdout.write(formulas_to_json(formulas))
        return EXIT_OK
    for instance, formula in formulas:
        print(f"{instance.rule_id} {instance.source.value.upper()} {instance.kind.value} {instance.action} "
              f"{instance.context.name}: {formula.render()}")
    return EXIT_OK
