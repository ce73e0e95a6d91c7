# Copyright (c) 2024 by Jonathan AW

"""
Unit Testing of SynthesisRuleFactory: every rule role maps onto its strategy.
"""
# test_rule_factory.py

import pytest

from bl.factories.synthesis_rule_factory import SynthesisRuleFactory
from bl.rules.applied_too_long_rule import AppliedTooLongRule
from bl.rules.demand_rule import DemandRule
from bl.rules.forbid_rule import ForbidRule
from bl.rules.stopped_too_soon_rule import StoppedTooSoonRule
from bl.rules.too_early_rule import TooEarlyRule
from dal.models import RuleRole
from exceptions import SynthesisRuleNotFoundException


@pytest.mark.parametrize("role, strategy", [
    (RuleRole.DEMAND, DemandRule),
    (RuleRole.FORBID, ForbidRule),
    (RuleRole.TOO_EARLY, TooEarlyRule),
    (RuleRole.APPLIED_TOO_LONG, AppliedTooLongRule),
    (RuleRole.STOPPED_TOO_SOON, StoppedTooSoonRule),
])
def test_load_rule(role, strategy):
    assert isinstance(SynthesisRuleFactory().load_rule(role), strategy)


def test_load_rule_returns_fresh_instances():
    factory = SynthesisRuleFactory()
    assert factory.load_rule(RuleRole.DEMAND) is not factory.load_rule(RuleRole.DEMAND)


def test__neg_load_rule_unknown_role(caplog):
    with pytest.raises(SynthesisRuleNotFoundException, match="No synthesis rule for role 'teleport'"):
        SynthesisRuleFactory().load_rule("teleport")
    assert "Cannot load rule" in caplog.text
