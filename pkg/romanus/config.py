"""
Package configuration source: config.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""

import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache

from .errors import ConfigError

VERSION = "1.0.0-alpha.1"

# Environment variable -> Settings field
_ENV_VARS = {
    'ROMANUS_DIGITS': 'digits',
    'ROMANUS_MAX_Q': 'max_q',
    'ROMANUS_RECOGNITION_DIGITS': 'recognition_digits',
    'ROMANUS_CONFIRM_DIGITS': 'confirm_digits',
    'ROMANUS_REFINE_LIMIT': 'refine_limit',
    'ROMANUS_VERIFY_TOWERS': 'verify_towers',
}

_TRUE_WORDS = ('1', 'true', 'yes', 'on')
_FALSE_WORDS = ('0', 'false', 'no', 'off')


@dataclass(frozen=True)
class Settings:
    """
    Tunables shared by the numeric modules.

    Attributes:
        digits: default number of guaranteed decimal digits.
        max_q: largest denominator tried by angle recognition.
        recognition_digits: digits of the numeric inversion feeding the continued fraction.
        confirm_digits: extra digits used to confirm a recognized angle.
        refine_limit: number of precision doublings before a sign is declared undecidable.
        verify_towers: re-check every constructed tower numerically at 40 digits.
    """

    digits: int = 30
    max_q: int = 4096
    recognition_digits: int = 30
    confirm_digits: int = 15
    refine_limit: int = 10
    verify_towers: bool = True

    def __post_init__(self):
        for name in ('digits', 'max_q', 'recognition_digits', 'confirm_digits', 'refine_limit'):
            if getattr(self, name) < 1:
                raise ConfigError(f"Setting '{name}' must be a positive integer.")

        if self.max_q < 2:
            raise ConfigError("Setting 'max_q' must be at least 2.")

    @classmethod
    def from_env(cls, environ=None):
        """
        Build settings from ROMANUS_* environment variables, defaults for the rest.
        :param environ: mapping to read instead of os.environ.
        :return: Settings instance.
        """

        environ = os.environ if environ is None else environ
        types = {f.name: f.type for f in fields(cls)}
        values = {}

        for var, name in _ENV_VARS.items():
            if var not in environ:
                continue

            raw = environ[var].strip()
            if types[name] in (bool, 'bool'):
                values[name] = _parse_bool(var, raw)
            else:
                try:
                    values[name] = int(raw)
                except ValueError:
                    raise ConfigError(f"{var}={raw!r} is not an integer.") from None

        return cls(**values)

    def with_overrides(self, **changes):
        """
        Copy of the settings with the non-None keyword values replaced.
        """

        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _parse_bool(var: str, raw: str) -> bool:
    word = raw.lower()
    if word in _TRUE_WORDS:
        return True
    if word in _FALSE_WORDS:
        return False
    raise ConfigError(f"{var}={raw!r} is not a boolean.")


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """
    Process-wide settings, read from the environment once.
    """

    return Settings.from_env()
