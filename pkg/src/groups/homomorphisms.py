"""
Registered Lie group homomorphisms with their differentials.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from ..exceptions import ContractViolation
from .abelian import wrap
from .factory import make_group
from .interface import GroupSpec


@dataclass(frozen=True)
class Homomorphism:
    """
    A Lie group homomorphism Psi: source -> target.

    Attributes:
        name: Registry key
        source: Domain group
        target: Codomain group
        apply: Psi on elements
        differential: d_e Psi on algebra coordinates
    """

    name: str
    source: GroupSpec
    target: GroupSpec
    apply: Callable[[np.ndarray], np.ndarray]
    differential: Callable[[np.ndarray], np.ndarray]


def identity_hom(group: GroupSpec) -> Homomorphism:
    return Homomorphism(f"id_{group.name}", group, group, lambda g: np.array(g, copy=True),
                        lambda x: np.asarray(x, dtype=float).copy())


def su2_to_so3() -> Homomorphism:
    """Adjoint double cover; the differential is the identity in coordinates."""
    su2, so3 = make_group("su2"), make_group("so3")
    return Homomorphism("su2->so3", su2, so3, lambda u: np.real(su2.Ad_matrix(u)),
                        lambda x: np.asarray(x, dtype=float).copy())


def abelian_to_torus(d: int) -> Homomorphism:
    """Canonical projection R^d -> R^d / 2 pi Z^d."""
    return Homomorphism(f"abelian({d})->torus({d})", make_group("abelian", d), make_group("torus", d),
                        wrap, lambda x: np.asarray(x, dtype=float).copy())


def make_homomorphism(name: str, group: GroupSpec = None) -> Homomorphism:
    """
    Look up a registered homomorphism: "identity" (needs group), "su2->so3",
    or "abelian->torus" (uses the dimension of group, default 1).
    """
    builders: Dict[str, Tuple[Callable[[], Homomorphism], bool]] = {
        "identity": (lambda: identity_hom(group), True),
        "su2->so3": (su2_to_so3, False),
        "abelian->torus": (lambda: abelian_to_torus(group.dim if group is not None else 1), False),
    }
    if name not in builders:
        raise ContractViolation(f"unknown homomorphism {name!r}; known: {sorted(builders)}")
    builder, needs_group = builders[name]
    if needs_group and group is None:
        raise ContractViolation(f"homomorphism {name!r} needs a group")
    return builder()
