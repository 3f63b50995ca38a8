"""
Construction of group instances by name.
"""
import re
from functools import lru_cache
from typing import Optional

from ..exceptions import ContractViolation, UnknownGroupError
from .abelian import AbelianGroup, TorusGroup
from .interface import GroupSpec
from .matrix_groups import GeneralLinearGroup, Heisenberg3, SpecialOrthogonal3, SpecialUnitary2, UnitGroup

_PARAMETRIZED = {
    "gl": GeneralLinearGroup,
    "abelian": AbelianGroup,
    "torus": TorusGroup,
    "unit_group": UnitGroup,
}

_FIXED = {
    "so3": SpecialOrthogonal3,
    "su2": SpecialUnitary2,
    "heisenberg3": Heisenberg3,
}

GROUP_NAMES = tuple(sorted(_FIXED)) + tuple(f"{name}(n)" for name in sorted(_PARAMETRIZED))

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\(\s*(-?\d+)\s*\))?\s*$")


def parse_group_name(name: str, n: Optional[int] = None):
    """
    Split "gl(3)" into ("gl", 3); an explicit n overrides the parenthesized one.

    Raises:
        UnknownGroupError: If the name is not recognised
    """
    match = _CALL.match(name or "")
    if not match:
        raise UnknownGroupError(f"cannot parse group name {name!r}; known groups: {', '.join(GROUP_NAMES)}")
    kind, size = match.group(1), match.group(2)
    size = n if n is not None else (int(size) if size is not None else None)
    if kind not in _FIXED and kind not in _PARAMETRIZED:
        raise UnknownGroupError(f"unknown group {kind!r}; known groups: {', '.join(GROUP_NAMES)}")
    return kind, size


@lru_cache()
def make_group(name: str, n: Optional[int] = None) -> GroupSpec:
    """
    Build (and cache) a group instance.

    Args:
        name: One of so3, su2, heisenberg3, gl(n), abelian(d), torus(d), unit_group(n)
        n: Size parameter, alternatively given in parentheses

    Returns:
        GroupSpec: Immutable group instance

    Raises:
        UnknownGroupError: Unknown name
        ContractViolation: Missing or non-positive size parameter
    """
    kind, size = parse_group_name(name, n)
    if kind in _FIXED:
        return _FIXED[kind]()
    if size is None:
        raise ContractViolation(f"group {kind} needs a size parameter, e.g. {kind}(2)")
    if size < 1:
        raise ContractViolation(f"group size must be >= 1, got {size}")
    return _PARAMETRIZED[kind](size)
