# Copyright (c) 2024 by Jonathan AW

"""
Purpose: Tests for configuration selection. [get_config by name and by SBM_ENV]
"""

import pytest

from config import Config, DevelopmentConfig, ProductionConfig, TestingConfig, get_config


@pytest.mark.parametrize("name, expected", [
    ("development", DevelopmentConfig),
    ("testing", TestingConfig),
    ("production", ProductionConfig),
    ("Testing", TestingConfig),
])
def test_get_config_by_name(name, expected):
    assert get_config(name) is expected


def test_get_config_reads_environment(monkeypatch):
    monkeypatch.setenv("SBM_ENV", "development")
    assert get_config() is DevelopmentConfig


def test_get_config_defaults_to_production(monkeypatch):
    monkeypatch.delenv("SBM_ENV", raising=False)
    assert get_config() is ProductionConfig


def test_testing_config_runs_in_process():
    assert TestingConfig.VERIFY_WORKERS == 1
    assert TestingConfig.TESTING


def test_every_config_has_the_shared_settings():
    for config in (DevelopmentConfig, TestingConfig, ProductionConfig):
        assert issubclass(config, Config)
        assert isinstance(config.DEFAULT_BOUND, int)
        assert isinstance(config.LOG_FORMAT, str)


# Negative Test Cases

def test__neg_get_config_unknown_name_falls_back_to_production():
    assert get_config("staging") is ProductionConfig
