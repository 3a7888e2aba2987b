from .centralizer_family import CentralizerFamily
from .element_set import ElementSet
from .field_gf2k import FieldGF2k
from .finite_group import FiniteGroup
from .group_family_enum import GroupFamilyEnum
from .group_spec import GroupSpec
from .metacyclic_normal_form_group import MetacyclicNormalFormGroup
from .special_linear_group import SpecialLinearGF2kGroup

__all__ = [
    "CentralizerFamily",
    "ElementSet",
    "FieldGF2k",
    "FiniteGroup",
    "GroupFamilyEnum",
    "GroupSpec",
    "MetacyclicNormalFormGroup",
    "SpecialLinearGF2kGroup",
]
