# Copyright (c) 2024 by Jonathan AW
# config.py
# Purpose: Holds the configuration settings for the toolchain, like the verification bound, worker fan-out and logging, per environment.

from environs import Env
from dotenv import load_dotenv

load_dotenv()

class Config:
    DEFAULT_BOUND = Env().int('SBM_DEFAULT_BOUND', 6)
    VERIFY_WORKERS = Env().int('SBM_VERIFY_WORKERS', 1)
    RANDOM_MAX_ALPHABET = Env().int('SBM_RANDOM_MAX_ALPHABET', 4)
    LOG_LEVEL = Env().str('SBM_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = Env().str('SBM_LOG_FORMAT', '%(asctime)s %(levelname)s %(name)s: %(message)s')

class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = Env().str('SBM_LOG_LEVEL', 'DEBUG')

class TestingConfig(Config):
    TESTING = True
    VERIFY_WORKERS = 1

class ProductionConfig(Config):
    DEBUG = False


CONFIGS = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
}

def get_config(name: str = None) -> type:
    """
    Select the configuration class by name, falling back to SBM_ENV and then to production.
    """
    key = name or Env().str('SBM_ENV', 'production')
    return CONFIGS.get(key.lower(), ProductionConfig)
