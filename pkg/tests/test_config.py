"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for test_config.py
"""

import os
import unittest
from unittest import mock

from config import Config, DevelopmentConfig, config as named_configs, get_config
from utils.errors import ConfigError
from utils.i18n import get_text
from utils.rng import make_rng, normalize_seed, class_rng, trial_rng, shuffle_rng


def clean_environ():
    return {k: v for k, v in os.environ.items() if not k.startswith('SGI_TS_')}


class ConfigTestCase(unittest.TestCase):

    def test_defaults(self):
        with mock.patch.dict(os.environ, clean_environ(), clear=True):
            cfg = get_config()
        self.assertEqual(cfg.SEED, 0)
        self.assertEqual(cfg.DISPLAY_DECIMALS, 3)
        self.assertEqual(cfg.LABEL_COLUMN, 'Protocol')
        self.assertEqual(cfg.OUTPUT_FORMAT, 'markdown')
        self.assertEqual(cfg.LANGUAGE, 'en')
        self.assertEqual(cfg.MONTE_CARLO_TRIALS, 10000)
        self.assertEqual(cfg.WORKERS, 1)
        self.assertEqual(cfg.LOG_LEVEL, 'WARNING')
        self.assertTrue(cfg.HISTOGRAM_PATH.endswith(os.path.join('data', 'pu_tds.hist')))

    def test_environment_overrides(self):
        env = dict(clean_environ(), SGI_TS_SEED='-4', SGI_TS_FORMAT='json', SGI_TS_LANGUAGE='fr',
                   SGI_TS_WORKERS='3', SGI_TS_LOG_LEVEL='info', SGI_TS_LABEL_COLUMN='app')
        with mock.patch.dict(os.environ, env, clear=True):
            cfg = Config()
        self.assertEqual(cfg.SEED, -4)
        self.assertEqual(cfg.OUTPUT_FORMAT, 'json')
        self.assertEqual(cfg.LANGUAGE, 'fr')
        self.assertEqual(cfg.WORKERS, 3)
        self.assertEqual(cfg.LOG_LEVEL, 'INFO')
        self.assertEqual(cfg.LABEL_COLUMN, 'app')

    def test_named_configs(self):
        with mock.patch.dict(os.environ, clean_environ(), clear=True):
            self.assertIsInstance(get_config('development'), DevelopmentConfig)
            self.assertEqual(get_config('development').LOG_LEVEL, 'DEBUG')
            self.assertEqual(get_config('testing').MONTE_CARLO_TRIALS, 2000)
        with mock.patch.dict(os.environ, dict(clean_environ(), SGI_TS_ENV='testing'), clear=True):
            self.assertIsInstance(get_config(), named_configs['testing'])

    def test_invalid_values(self):
        cases = [
            {'SGI_TS_SEED': 'abc'},
            {'SGI_TS_DECIMALS': '-1'},
            {'SGI_TS_TRIALS': '0'},
            {'SGI_TS_WORKERS': '1.5'},
            {'SGI_TS_FORMAT': 'html'},
            {'SGI_TS_LANGUAGE': 'de'},
        ]
        for case in cases:
            with mock.patch.dict(os.environ, dict(clean_environ(), **case), clear=True):
                with self.assertRaises(ConfigError):
                    Config()
        with self.assertRaises(ConfigError):
            get_config('staging')

    def test_blank_values_fall_back(self):
        with mock.patch.dict(os.environ, dict(clean_environ(), SGI_TS_TRIALS='  '), clear=True):
            self.assertEqual(Config().MONTE_CARLO_TRIALS, 10000)


class TranslationTestCase(unittest.TestCase):

    def test_lookup_and_fallbacks(self):
        self.assertEqual(get_text('report.protocol'), 'Protocol')
        self.assertEqual(get_text('report.protocol', 'fr'), 'Protocole')
        self.assertEqual(get_text('report.protocol', 'de'), 'Protocol')
        self.assertEqual(get_text('report.unknown_key', 'fr'), 'report.unknown_key')
        self.assertEqual(get_text('cli.split_done', 'en', train=7, test=3), 'Train: 7 records, test: 3 records')


class RandomStreamTestCase(unittest.TestCase):

    def test_seed_normalization(self):
        self.assertEqual(normalize_seed(-1), 2 ** 64 - 1)
        self.assertEqual(normalize_seed(2 ** 64 + 5), 5)
        self.assertEqual(make_rng(-1).integers(0, 1000, 5).tolist(), make_rng(2 ** 64 - 1).integers(0, 1000, 5).tolist())

    def test_streams_are_independent(self):
        first = class_rng(7, 0).integers(0, 10 ** 9, 4).tolist()
        self.assertEqual(first, class_rng(7, 0).integers(0, 10 ** 9, 4).tolist())
        self.assertNotEqual(first, class_rng(7, 1).integers(0, 10 ** 9, 4).tolist())
        self.assertNotEqual(first, make_rng(7).integers(0, 10 ** 9, 4).tolist())

    def test_trial_and_shuffle_streams(self):
        draws = trial_rng(7, 500, 3).integers(0, 10 ** 9, 4).tolist()
        self.assertEqual(draws, make_rng(7, 1, 500, 3).integers(0, 10 ** 9, 4).tolist())
        self.assertNotEqual(draws, trial_rng(7, 500, 4).integers(0, 10 ** 9, 4).tolist())
        self.assertNotEqual(draws, trial_rng(7, 501, 3).integers(0, 10 ** 9, 4).tolist())
        self.assertNotEqual(draws, shuffle_rng(7, 500, 3).integers(0, 10 ** 9, 4).tolist())


if __name__ == '__main__':
    unittest.main()
