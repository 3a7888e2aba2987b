from .environment_loader_interface import IEnvironmentLoader
from .settings_retriever_interface import ISettingsRetriever, SettingDto

__all__ = ["IEnvironmentLoader", "ISettingsRetriever", "SettingDto"]
