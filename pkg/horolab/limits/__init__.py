from .family import PropagatedFamily, build_family, harmonic_family, sl2_product_family
from .admissibility import check_admissible, level_algebra
from .checks import (
    gamma_commute_check,
    graded_proj_check,
    kernel_limit_check,
    dual_radon_limit,
    sphere_radon_limit,
    noncommuting_defect,
    multiplicity_one_check,
    compatible_dual_dimension,
    projective_evaluation_check,
    graded_ring_check,
    random_points,
)

__all__ = [
    "PropagatedFamily",
    "build_family",
    "harmonic_family",
    "sl2_product_family",
    "check_admissible",
    "level_algebra",
    "gamma_commute_check",
    "graded_proj_check",
    "kernel_limit_check",
    "dual_radon_limit",
    "sphere_radon_limit",
    "noncommuting_defect",
    "multiplicity_one_check",
    "compatible_dual_dimension",
    "projective_evaluation_check",
    "graded_ring_check",
    "random_points",
]
