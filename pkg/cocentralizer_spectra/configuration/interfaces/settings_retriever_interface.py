from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SettingDto:
    name: str
    value: str


class ISettingsRetriever(ABC):
    @abstractmethod
    async def retrieve_setting(self, setting_name: str) -> Optional[SettingDto]:
        """
        Retrieves a setting by name.

        Args:
            setting_name: The name of the setting, e.g. COCG_TOL

        Returns:
            Optional SettingDto if found and non-blank, None otherwise
        """
        pass

    @abstractmethod
    async def retrieve_mandatory_setting_value(self, setting_name: str) -> str:
        """
        Retrieves a mandatory setting value by name.

        Raises:
            MissingSettingError if the setting is absent
        """
        pass

    @abstractmethod
    async def retrieve_optional_setting_value(self, setting_name: str) -> Optional[str]:
        pass
