"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for i18n.py
"""

import json
import os

_translations = {}

LOCALES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'locales')
DEFAULT_LANGUAGE = 'en'


def load_translations():
    """Loads translation files from locales/ directory."""
    global _translations
    for lang in ['en', 'fr']:
        file_path = os.path.join(LOCALES_DIR, f'{lang}.json')
        if os.path.exists(file_path):
            with open(file_path, 'r', encoding='utf-8') as f:
                _translations[lang] = json.load(f)
        else:
            _translations[lang] = {}


def _lookup(lang, keys):
    value = _translations.get(lang, {})
    for k in keys:
        if isinstance(value, dict):
            value = value.get(k)
        else:
            return None
    return value


def get_text(key, lang=None, **params):
    """
    Retrieves the translation for the given dotted key (e.g., 'report.protocol').
    Falls back to English, then to the key itself.
    """
    if not _translations:
        load_translations()

    lang = lang or DEFAULT_LANGUAGE
    keys = key.split('.')

    value = _lookup(lang, keys)
    if value is None and lang != DEFAULT_LANGUAGE:
        value = _lookup(DEFAULT_LANGUAGE, keys)
    if value is None:
        return key
    return value.format(**params) if params else value
