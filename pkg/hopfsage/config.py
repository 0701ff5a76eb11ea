import os
from dotenv import load_dotenv
import logging
load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, default))


class Config:
    """Set hopfsage configuration vars from .env file."""
    # Logging
    LOG_LEVEL = getattr(logging, os.getenv('HOPFSAGE_LOG_LEVEL', 'INFO'))
    LOG_FILE = os.getenv('HOPFSAGE_LOG_FILE')

    # Randomized seeds for closure searches over Q
    SEED = _env_int('HOPFSAGE_SEED', 0)
    RANDOM_SEEDS = _env_int('HOPFSAGE_RANDOM_SEEDS', 8)
    SEED_BOUND = _env_int('HOPFSAGE_SEED_BOUND', 3)

    # Primitive element search (field test)
    PRIMITIVE_BOUND = _env_int('HOPFSAGE_PRIMITIVE_BOUND', 2)
    PRIMITIVE_BUDGET = _env_int('HOPFSAGE_PRIMITIVE_BUDGET', 200)

    # Largest number of vectors an exhaustive F_p search may enumerate
    EXHAUSTIVE_LIMIT = _env_int('HOPFSAGE_EXHAUSTIVE_LIMIT', 2 ** 16)

    # Worker count for independent per-module certifications
    JOBS = _env_int('HOPFSAGE_JOBS', 1)


class DevConfig(Config):
    LOG_LEVEL = logging.DEBUG


class ProdConfig(Config):
    LOG_LEVEL = logging.WARNING

    def __init__(self):
        if self.EXHAUSTIVE_LIMIT < 1 or self.RANDOM_SEEDS < 0:
            raise ValueError(
                'HOPFSAGE_EXHAUSTIVE_LIMIT must be positive and '
                'HOPFSAGE_RANDOM_SEEDS non-negative')


class TestConfig(Config):
    TESTING = True
    LOG_FILE = None
    LOG_LEVEL = logging.ERROR
    SEED = 0
    JOBS = 1


_active = Config


def activate(config_class) -> None:
    global _active
    _active = config_class


def current_config():
    """The configuration activated by ``create_app``."""
    return _active
