from .roots import (
    Weight,
    RootSystemData,
    inner_product,
    coroot_pairing,
    fundamental_spherical_weights,
    omega_coefficients,
    weight_from_omega,
    is_in_lambda_plus,
    dominance_leq,
    dual_weight,
    weyl_dim,
    height,
    dominant_weights_up_to,
)
from .catalog import Family, SpaceData, make_space, parse_family, propagates, catalog_spaces
from .propagation import (
    iota,
    restrict,
    is_minimal_in_fiber,
    classify_limit,
    WeightSequence,
    chain_from_levels,
)

__all__ = [
    "Weight",
    "RootSystemData",
    "inner_product",
    "coroot_pairing",
    "fundamental_spherical_weights",
    "omega_coefficients",
    "weight_from_omega",
    "is_in_lambda_plus",
    "dominance_leq",
    "dual_weight",
    "weyl_dim",
    "height",
    "dominant_weights_up_to",
    "Family",
    "SpaceData",
    "make_space",
    "parse_family",
    "propagates",
    "catalog_spaces",
    "iota",
    "restrict",
    "is_minimal_in_fiber",
    "classify_limit",
    "WeightSequence",
    "chain_from_levels",
]
