import os

from cocentralizer_spectra.constants import (
    DEFAULT_SETTINGS_FILE,
    DEFAULT_SETTINGS_SOURCE,
    ENV_SETTINGS_FILE,
    ENV_SETTINGS_SOURCE,
)
from cocentralizer_spectra.exceptions import InvalidSettingError


class IocConfig:
    """
    Selects where the composition root reads verification settings from.

    Values are read from the environment when asked for, so a .env file loaded at startup is honoured.

    Attributes:
        VALID_SETTINGS_SOURCES (set): ENVIRONMENT reads COCG_* variables; LOCALFILE reads a key=value file.
    """

    VALID_SETTINGS_SOURCES = {"ENVIRONMENT", "LOCALFILE"}

    @classmethod
    def settings_source(cls) -> str:
        """
        Raises:
            InvalidSettingError: If COCG_SETTINGS_SOURCE is not one of VALID_SETTINGS_SOURCES.
        """
        source = os.getenv(ENV_SETTINGS_SOURCE, DEFAULT_SETTINGS_SOURCE).strip().upper()
        if source not in cls.VALID_SETTINGS_SOURCES:
            raise InvalidSettingError(
                f"Invalid {ENV_SETTINGS_SOURCE}: '{source}'. Must be one of {', '.join(sorted(cls.VALID_SETTINGS_SOURCES))}."
            )
        return source

    @classmethod
    def settings_file(cls) -> str:
        return os.getenv(ENV_SETTINGS_FILE, DEFAULT_SETTINGS_FILE)
