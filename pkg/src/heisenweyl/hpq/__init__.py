"""Arithmetic in H_{p,q} and its named elements, identities and maps."""

from .algebra import (
    HeisenbergAlgebra,
    PBWElement,
    commutator,
    format_pbw_monomial,
    pbw_multiply,
    quommutator,
)
from .identities import (
    central_witness,
    check_normal,
    downup_residues,
    ident_by_multiplication,
    ident_closed_form,
    is_central,
    omega,
    root_of_unity_centrality,
    specialized_terms,
    theta,
    twist_power,
    vanishes_under,
    verify_downup,
    verify_ident,
    zhang_twist_product,
    zhang_twist_relations,
)
from .morphisms import (
    AlgebraMorphism,
    equal_parameter_involution,
    identity_morphism,
    inverse_parameter_map,
    swap_parameter_map,
    verify_morphism,
)

__all__ = [
    "AlgebraMorphism",
    "HeisenbergAlgebra",
    "PBWElement",
    "central_witness",
    "check_normal",
    "commutator",
    "downup_residues",
    "equal_parameter_involution",
    "format_pbw_monomial",
    "ident_by_multiplication",
    "ident_closed_form",
    "identity_morphism",
    "inverse_parameter_map",
    "is_central",
    "omega",
    "pbw_multiply",
    "quommutator",
    "root_of_unity_centrality",
    "specialized_terms",
    "swap_parameter_map",
    "theta",
    "twist_power",
    "vanishes_under",
    "verify_downup",
    "verify_ident",
    "verify_morphism",
    "zhang_twist_product",
    "zhang_twist_relations",
]
