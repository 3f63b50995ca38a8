from .abelian import AbelianGroup, TorusGroup, wrap
from .factory import GROUP_NAMES, make_group, parse_group_name
from .homomorphisms import Homomorphism, abelian_to_torus, identity_hom, make_homomorphism, su2_to_so3
from .interface import GroupElement, GroupSpec
from .matrix_groups import (GeneralLinearGroup, Heisenberg3, MatrixGroup, SpecialOrthogonal3, SpecialUnitary2,
                            UnitGroup, operator_seminorm)

__all__ = [
    "GroupSpec", "GroupElement", "MatrixGroup", "GeneralLinearGroup", "UnitGroup", "SpecialOrthogonal3",
    "SpecialUnitary2", "Heisenberg3", "AbelianGroup", "TorusGroup", "wrap", "operator_seminorm",
    "make_group", "parse_group_name", "GROUP_NAMES",
    "Homomorphism", "make_homomorphism", "identity_hom", "su2_to_so3", "abelian_to_torus",
]
