import logging
from typing import Optional

from dotenv import find_dotenv, load_dotenv

from cocentralizer_spectra.configuration.interfaces.environment_loader_interface import IEnvironmentLoader


class DotenvEnvironmentLoader(IEnvironmentLoader):
    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def load_environment(
        self,
        dotenv_path: Optional[str] = None,
        override: bool = False,
        current_working_directory: bool = True,
    ) -> bool:
        """Load COCG_* settings from a .env file found from the working directory upwards.

        override=False keeps variables already exported in the shell ahead of the file.
        """
        self._logger.debug("DotenvEnvironmentLoader.load_environment called.  Looking for .env file.")

        path = dotenv_path or find_dotenv(usecwd=current_working_directory)
        if not path:
            self._logger.info("No .env file found to load")
            return False

        loaded = load_dotenv(path, override=override)
        if loaded:
            self._logger.debug("Environment variables loaded from %s", path)
        else:
            self._logger.info("Failed to load .env file or no variables were set")
        return loaded
