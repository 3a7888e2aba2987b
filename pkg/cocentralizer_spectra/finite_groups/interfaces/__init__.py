from .group_builder_interface import IGroupBuilder

__all__ = ["IGroupBuilder"]
