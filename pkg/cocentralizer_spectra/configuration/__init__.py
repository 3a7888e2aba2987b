from .concretes.dotenv.dotenv_environment_loader import DotenvEnvironmentLoader
from .concretes.env_variable.environment_variables_settings_retriever import EnvironmentVariablesSettingsRetriever
from .concretes.local_file.local_file_settings_retriever import LocalFileSettingsRetriever
from .domain.verification_settings import VerificationSettings
from .interfaces import IEnvironmentLoader, ISettingsRetriever, SettingDto

__all__ = [
    "DotenvEnvironmentLoader",
    "EnvironmentVariablesSettingsRetriever",
    "IEnvironmentLoader",
    "ISettingsRetriever",
    "LocalFileSettingsRetriever",
    "SettingDto",
    "VerificationSettings",
]
