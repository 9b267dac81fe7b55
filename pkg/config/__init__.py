"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for __init__.py
"""

import os
from dotenv import load_dotenv

from utils.errors import ConfigError

load_dotenv()


def _env_int(name, default, minimum=None):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} doit être un entier, reçu '{raw}'")
    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} doit être >= {minimum}, reçu {value}")
    return value


class Config:
    def __init__(self):
        self.SEED = _env_int('SGI_TS_SEED', 0)
        self.DISPLAY_DECIMALS = _env_int('SGI_TS_DECIMALS', 3, minimum=0)
        self.LABEL_COLUMN = os.environ.get('SGI_TS_LABEL_COLUMN', 'Protocol')
        self.OUTPUT_FORMAT = os.environ.get('SGI_TS_FORMAT', 'markdown')
        self.LANGUAGE = os.environ.get('SGI_TS_LANGUAGE', 'en')
        self.MONTE_CARLO_TRIALS = _env_int('SGI_TS_TRIALS', self.DEFAULT_TRIALS, minimum=1)
        self.WORKERS = _env_int('SGI_TS_WORKERS', 1, minimum=1)
        self.LOG_LEVEL = os.environ.get('SGI_TS_LOG_LEVEL', self.DEFAULT_LOG_LEVEL).upper()

        if self.OUTPUT_FORMAT not in self.FORMATS:
            raise ConfigError(f"SGI_TS_FORMAT inconnu: '{self.OUTPUT_FORMAT}'")
        if self.LANGUAGE not in self.LANGUAGES:
            raise ConfigError(f"SGI_TS_LANGUAGE inconnu: '{self.LANGUAGE}'")

    DEFAULT_TRIALS = 10000
    DEFAULT_LOG_LEVEL = 'WARNING'

    # PU-TDS reference histogram shipped with the repository
    HISTOGRAM_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data', 'pu_tds.hist')

    FORMATS = ['markdown', 'csv', 'json', 'pdf', 'xlsx']
    LANGUAGES = ['en', 'fr']
    DEFAULT_LANGUAGE = 'en'

    # x-axis values of the random-sampling loss study
    STUDY_N_VALUES = [500, 1000, 2000, 3000, 5000, 10000, 15000, 20000]
    STUDY_INTERVALS = [5, 6, 7, 8, 9, 10]
    STUDY_K_VALUES = [100, 200, 300, 400, 500, 700]


class DevelopmentConfig(Config):
    DEFAULT_LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    pass


class TestingConfig(Config):
    DEFAULT_TRIALS = 2000


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(config_name=None):
    if config_name is None:
        config_name = os.environ.get('SGI_TS_ENV', 'default')
    if config_name not in config:
        raise ConfigError(f"Configuration inconnue: '{config_name}'")
    return config[config_name]()
