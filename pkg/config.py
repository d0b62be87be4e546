"""
Configuration settings for the section-order toolkit.
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name, default):
    """Read an integer setting from the environment."""
    value = os.environ.get(name)
    if value is None or value == '':
        return default
    return int(value)


class Config:
    """Base configuration."""
    # Largest product |X_1| * ... * |X_n| the brute-force section enumeration accepts
    ENUMERATION_CAP = _env_int('SECORDER_ENUMERATION_CAP', 10 ** 6)

    # Truth-table sweeps (fast check, function predicates) stop at this width
    SWEEP_MAX_WIDTH = _env_int('SECORDER_SWEEP_MAX_WIDTH', 24)

    # canonical_family builds 2^n - 1 ground elements
    CANONICAL_MAX_WIDTH = _env_int('SECORDER_CANONICAL_MAX_WIDTH', 16)

    # A packed word must fit one machine word
    WORD_MAX_WIDTH = 62

    # Counterexample refutation accepts arities up to this bound
    REFUTE_MAX_ARITY = _env_int('SECORDER_REFUTE_MAX_ARITY', 3)

    BENCH_SEED = _env_int('SECORDER_BENCH_SEED', 0)
    OUTPUT_FORMAT = os.environ.get('SECORDER_OUTPUT_FORMAT') or 'text'
    LOG_LEVEL = os.environ.get('SECORDER_LOG_LEVEL') or 'INFO'


class DevelopmentConfig(Config):
    """Development configuration."""
    LOG_LEVEL = os.environ.get('SECORDER_LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    LOG_LEVEL = 'WARNING'
    BENCH_SEED = 7


class ProductionConfig(Config):
    """Production configuration."""
    LOG_LEVEL = os.environ.get('SECORDER_LOG_LEVEL') or 'WARNING'


# Configuration dictionary for easy access
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config
}
