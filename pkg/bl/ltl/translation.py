# Copyright (c) 2024 by Jonathan AW
# translation.py
# Summary: Turns UCA and DCA instances into LTL formulas. Six rules for the UCA types, and the two DCA types reuse the provided / not-provided rules with their meaning swapped.

import logging
from typing import Callable, Dict, List, Tuple

from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFormula, Next, Not, Release, Sent, VarEq)
from dal.models import Context, DcaType, RuleInstance, RuleSource, StpaModel, UcaType

logger = logging.getLogger(__name__)


def context_formula(context: Context) -> LtlFormula:
    """
    Conjunction of the context's assignments in the order they were written, nested to the left.
    """
    atoms = [VarEq(variable, value) for variable, value in context.assignments]
    formula = atoms[0]
    for atom in atoms[1:]:
        formula = And(formula, atom)
    return formula


def provided_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    return Globally(Implies(cv, Not(ca)))


def not_provided_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    # sent while the context holds, and at least once
    obligation = And(Release(ca, cv), Finally(ca))
    initially = Implies(cv, obligation)
    rising = Globally(Implies(And(Not(cv), Next(cv)), Next(obligation)))
    return And(initially, rising)


def too_late_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    return And(Implies(cv, ca), Globally(Implies(Not(cv), Next(Implies(cv, ca)))))


def too_early_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    return Globally(Implies(And(Not(cv), Next(cv)), Not(ca)))


def applied_too_long_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    return Globally(Implies(And(cv, ca), Next(Implies(Not(cv), Not(ca)))))


def stopped_too_soon_formula(cv: LtlFormula, ca: LtlFormula) -> LtlFormula:
    return Globally(Implies(And(cv, ca), Next(Implies(Not(ca), Not(cv)))))


UCA_RULES: Dict[UcaType, Callable[[LtlFormula, LtlFormula], LtlFormula]] = {
    UcaType.PROVIDED: provided_formula,
    UcaType.NOT_PROVIDED: not_provided_formula,
    UcaType.TOO_LATE: too_late_formula,
    UcaType.TOO_EARLY: too_early_formula,
    UcaType.APPLIED_TOO_LONG: applied_too_long_formula,
    UcaType.STOPPED_TOO_SOON: stopped_too_soon_formula,
}

DCA_RULES: Dict[DcaType, Callable[[LtlFormula, LtlFormula], LtlFormula]] = {
    DcaType.PROVIDED: not_provided_formula,
    DcaType.NOT_PROVIDED: provided_formula,
}


def translate_uca(action: str, kind: UcaType, context: Context) -> LtlFormula:
    return UCA_RULES[kind](context_formula(context), Sent(action))


def translate_dca(action: str, kind: DcaType, context: Context) -> LtlFormula:
    return DCA_RULES[kind](context_formula(context), Sent(action))


def translate_instance(instance: RuleInstance) -> LtlFormula:
    if instance.source == RuleSource.DCA:
        return translate_dca(instance.action, instance.kind, instance.context)
    return translate_uca(instance.action, instance.kind, instance.context)


def translate_model(model: StpaModel) -> List[Tuple[RuleInstance, LtlFormula]]:
    """
    One formula per rule instance, UCAs first, in declaration order.
    """
    formulas = [(instance, translate_instance(instance)) for instance in model.instances()]
    logger.info("Generated %d formulas for controller %s", len(formulas), model.controller)
    return formulas
