import logging
import os
import re
from typing import Optional, Pattern

from cocentralizer_spectra.configuration.interfaces.settings_retriever_interface import ISettingsRetriever, SettingDto
from cocentralizer_spectra.exceptions import InvalidSettingError, MissingSettingError


class EnvironmentVariablesSettingsRetriever(ISettingsRetriever):
    """Reads COCG_* settings from the process environment."""

    ERROR_MSG_MISSING_SETTING = 'Missing mandatory setting "%s"'
    ERROR_MSG_NAME_REGEX_VALIDATION_FAILED = 'Setting name "%s" failed regex validation (pattern="%s")'
    LOG_MSG_ATTEMPTING_RETRIEVAL = 'Attempting setting retrieval (name="%s")'
    LOG_MSG_SETTING_NOT_SET = 'Setting not set in environment (name="%s")'
    DEFAULT_SETTING_NAME_REGEX = r"^COCG_[A-Z0-9_]+$"

    def __init__(
        self,
        setting_name_regex: str = DEFAULT_SETTING_NAME_REGEX,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._regex_pattern: Pattern[str] = re.compile(setting_name_regex)
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    async def retrieve_setting(self, setting_name: str) -> Optional[SettingDto]:
        self._logger.debug(self.LOG_MSG_ATTEMPTING_RETRIEVAL, setting_name)
        if not self._regex_pattern.match(setting_name):
            raise InvalidSettingError(
                self.ERROR_MSG_NAME_REGEX_VALIDATION_FAILED % (setting_name, self._regex_pattern.pattern)
            )
        value = os.environ.get(setting_name, "")
        if value.strip() == "":
            self._logger.debug(self.LOG_MSG_SETTING_NOT_SET, setting_name)
            return None
        return SettingDto(name=setting_name, value=value.strip())

    async def retrieve_mandatory_setting_value(self, setting_name: str) -> str:
        dto = await self.retrieve_setting(setting_name)
        if dto is None:
            self._logger.error(self.ERROR_MSG_MISSING_SETTING, setting_name)
            raise MissingSettingError(self.ERROR_MSG_MISSING_SETTING % setting_name)
        return dto.value

    async def retrieve_optional_setting_value(self, setting_name: str) -> Optional[str]:
        dto = await self.retrieve_setting(setting_name)
        return None if dto is None else dto.value
