from abc import ABC, abstractmethod
from typing import Optional


class IEnvironmentLoader(ABC):
    @abstractmethod
    def load_environment(
        self,
        dotenv_path: Optional[str] = None,
        override: bool = False,
        current_working_directory: bool = True,
    ) -> bool:
        """
        Loads settings from a dotenv file into the process environment.

        Returns:
            True when a file was found and loaded
        """
        pass
