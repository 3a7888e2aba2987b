import asyncio
import logging
from pathlib import Path
from typing import Dict, Optional, Sequence

from cocentralizer_spectra.configuration.interfaces.settings_retriever_interface import ISettingsRetriever, SettingDto
from cocentralizer_spectra.exceptions import InvalidSettingError, MissingSettingError


class LocalFileSettingsRetriever(ISettingsRetriever):
    """
    Settings from key=value properties files; later files override earlier ones.
    Lines starting with # are comments. Files are read once, on first use.
    """

    ERROR_MSG_FILE_NAMES_EMPTY = "properties_file_names is null or empty"
    ERROR_MSG_FILE_NOT_FOUND = 'settings file "%s" not found'
    ERROR_MSG_MISSING_SETTING = 'Missing mandatory setting "%s"'
    ERROR_MSG_LOAD_FAILURE = "Failure loading settings files (%s)"
    LOG_MSG_ATTEMPTING_RETRIEVAL = 'Attempting setting retrieval (name="%s")'
    LOG_MSG_SETTING_NOT_FOUND = 'Setting not found in property files (names="%s", settingName="%s")'

    def __init__(
        self,
        properties_file_names: Sequence[str],
        *,
        base_directory: Optional[Path] = None,
        encoding: str = "utf-8",
        logger: Optional[logging.Logger] = None,
    ) -> None:
        if not properties_file_names or any(not str(name).strip() for name in properties_file_names):
            raise InvalidSettingError(self.ERROR_MSG_FILE_NAMES_EMPTY)
        self._properties_file_names: list[str] = [str(name) for name in properties_file_names]
        self._base_directory = base_directory
        self._encoding = encoding
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)
        self._properties_cache: Optional[Dict[str, str]] = None
        self._load_lock = asyncio.Lock()

    async def retrieve_setting(self, setting_name: str) -> Optional[SettingDto]:
        self._logger.debug(self.LOG_MSG_ATTEMPTING_RETRIEVAL, setting_name)
        await self._ensure_loaded()
        assert self._properties_cache is not None
        value = self._properties_cache.get(setting_name, "")
        if value.strip() == "":
            self._logger.debug(self.LOG_MSG_SETTING_NOT_FOUND, ",".join(self._properties_file_names), setting_name)
            return None
        return SettingDto(name=setting_name, value=value)

    async def retrieve_mandatory_setting_value(self, setting_name: str) -> str:
        dto = await self.retrieve_setting(setting_name)
        if dto is None:
            self._logger.error(self.ERROR_MSG_MISSING_SETTING, setting_name)
            raise MissingSettingError(self.ERROR_MSG_MISSING_SETTING % setting_name)
        return dto.value

    async def retrieve_optional_setting_value(self, setting_name: str) -> Optional[str]:
        dto = await self.retrieve_setting(setting_name)
        return None if dto is None else dto.value

    async def _ensure_loaded(self) -> None:
        if self._properties_cache is not None:
            return
        async with self._load_lock:
            if self._properties_cache is not None:
                return
            try:
                merged: Dict[str, str] = {}
                for file_name in self._properties_file_names:
                    merged.update(await asyncio.to_thread(self._parse_properties_file, self._resolve_path(file_name)))
                self._properties_cache = merged
            except Exception as ex:
                self._logger.error(self.ERROR_MSG_LOAD_FAILURE, ex)
                raise

    def _resolve_path(self, file_name: str) -> Path:
        path = Path(file_name)
        if not path.is_absolute() and self._base_directory:
            path = self._base_directory / path
        if not path.exists():
            raise MissingSettingError(self.ERROR_MSG_FILE_NOT_FOUND % path)
        return path

    def _parse_properties_file(self, file_path: Path) -> Dict[str, str]:
        props: Dict[str, str] = {}
        with file_path.open("r", encoding=self._encoding) as handle:
            for line in handle:
                stripped = line.strip()
                if not stripped or stripped.startswith("#") or "=" not in stripped:
                    continue
                key, value = stripped.split("=", 1)
                props[key.strip()] = value.strip()
        return props
