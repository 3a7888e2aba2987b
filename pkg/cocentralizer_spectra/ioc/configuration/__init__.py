from .ioc_configuration import IocConfig

__all__ = ["IocConfig"]
