from .radon import (
    Method,
    gamma,
    gamma_inv,
    c_mu_oracle,
    dual_radon,
    sphere_radon,
    sphere_radon_dual,
    sphere_pairing,
)
from .spheres import (
    GroupSphere,
    DualCoefficients,
    EmbeddingKind,
    canonical_radius,
    decreases_to_plateau,
    embedding_coeffs,
    sphere_to_horosphere_limit,
)
from .kernels import (
    KernelMethod,
    KernelSeries,
    spherical_models,
    kernel_kZ,
    kernel_kXi,
    kernel_tilde,
    in_domain_O,
    kernel_operator_KZ,
    kernel_operator_KXi,
)

__all__ = [
    "Method",
    "gamma",
    "gamma_inv",
    "c_mu_oracle",
    "dual_radon",
    "sphere_radon",
    "sphere_radon_dual",
    "sphere_pairing",
    "GroupSphere",
    "DualCoefficients",
    "EmbeddingKind",
    "canonical_radius",
    "decreases_to_plateau",
    "embedding_coeffs",
    "sphere_to_horosphere_limit",
    "KernelMethod",
    "KernelSeries",
    "spherical_models",
    "kernel_kZ",
    "kernel_kXi",
    "kernel_tilde",
    "in_domain_O",
    "kernel_operator_KZ",
    "kernel_operator_KXi",
]
