"""
Kernels of the U-integral inversion formulas and the generating kernel k̃.

    k_Z(g)  = Σ_μ d(μ) c(μ+ρ) f_μ(g)
    k_Ξ(g)  = Σ_μ d(μ) ψ_{ẽ_μ,μ}(g)
    k̃(g)   = Σ_μ f_μ(g)

K_Z f(h·ξ₀) = ∫_U f(us₀·x₀) k_Z(h⁻¹u) du reproduces Γf and
K_Ξ ψ(g·x₀) = ∫_U ψ(us₀·ξ₀) k_Ξ(g⁻¹u) du reproduces Γ⁻¹ψ. Only the μ present
in the integrand survive Schur orthogonality, so a finite truncation is exact
once it covers them.
"""
from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Any, Dict, List, Optional, Sequence
import logging

import numpy as np

from ..algebra.catalog import SpaceData
from ..algebra.roots import dominant_weights_up_to, omega_coefficients
from ..analysis.cfunction import c_mu
from ..config import get_settings
from ..groups.element import GroupElement
from ..representations.base import RepModel
from ..representations.functions import RegularFunction, Side
from ..representations.registry import build_model
from ..utils.error_handler import (
    DomainError,
    TruncationError,
    UnsupportedError,
    ValidationError,
)
from ..utils.performance_utils import timed

logger = logging.getLogger(__name__)


class KernelMethod(str, Enum):
    QUADRATURE = "quadrature"
    SCHUR = "schur"
    AUTO = "auto"


def spherical_models(space: SpaceData, truncation: int) -> List[RepModel]:
    """Models of every μ ∈ Λ⁺ with ω-height at most ``truncation``."""
    if truncation < 0:
        raise ValidationError("truncation must be non-negative", {"truncation": truncation})
    return [build_model(space, mu) for mu in dominant_weights_up_to(space.rs, truncation)]


def kernel_kZ(models: Sequence[RepModel], g: GroupElement) -> complex:
    total = 0j
    for model in models:
        total += model.dimension * c_mu(model.space, model.mu) * model.f_highest(g)
    return complex(total)


def kernel_kXi(models: Sequence[RepModel], g: GroupElement) -> complex:
    total = 0j
    for model in models:
        total += model.dimension * model.coeff_psi(model.e_tilde, g)
    return complex(total)


def torus_ratios(model: RepModel, g: GroupElement) -> np.ndarray:
    """b_j = a^{−ω_j} for g = nak, read off the KAN decomposition of g⁻¹."""
    return np.exp(model.log_a_omega(g.inverse()))


def in_domain_O(model: RepModel, g: GroupElement) -> bool:
    """g ∈ 𝒪 = {nak : a^{−ω_j} < 1 for every j}; the boundary is excluded."""
    roundoff = get_settings().tolerances.roundoff
    return bool(np.all(torus_ratios(model, g) < 1.0 - roundoff))


@dataclass(frozen=True)
class KernelSeries:
    value: complex
    closed_form: Optional[float]
    tail_bound: Optional[float]
    in_domain: bool
    terms: int

    @property
    def error(self) -> Optional[float]:
        if self.closed_form is None:
            return None
        return abs(self.value - self.closed_form)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value.real,
            "closedForm": self.closed_form,
            "tailBound": self.tail_bound,
            "error": self.error,
            "inDomain": self.in_domain,
            "terms": self.terms,
        }


def kernel_tilde(space: SpaceData, g: GroupElement, truncation: int) -> KernelSeries:
    """Σ_{|μ| ≤ truncation} f_μ(g) with the closed form ∏ 1/(1 − b_j) on 𝒪."""
    models = spherical_models(space, truncation)
    value = complex(sum(model.f_highest(g) for model in models))
    first = models[0]
    b = torus_ratios(first, g)
    inside = bool(np.all(b < 1.0 - get_settings().tolerances.roundoff))
    if not inside:
        logger.warning(f"k̃ at a point outside 𝒪 on {space.label}: b = {b.tolist()}, series may diverge")
        return KernelSeries(value, None, None, False, len(models))
    closed = float(prod(1.0 / (1.0 - x) for x in b))
    partial = sum(float(prod(x ** int(k) for x, k in zip(np.abs(b), omega_coefficients(m.mu, space.rs))))
                  for m in models)
    tail = float(prod(1.0 / (1.0 - abs(x)) for x in b)) - partial
    return KernelSeries(value, closed, max(tail, 0.0), True, len(models))


def _covering_models(f: RegularFunction, truncation: Optional[int]) -> List[RepModel]:
    if not f.components:
        raise ValidationError("empty function")
    space = f.models[0].space
    heights = [sum(key) for key in f.components]
    truncation = max(heights) if truncation is None else truncation
    if max(heights) > truncation:
        raise TruncationError("kernel truncation does not cover the function",
                              {"truncation": truncation, "maxHeight": max(heights)})
    return spherical_models(space, truncation)


def _quadrature(f: RegularFunction, point: GroupElement, models: List[RepModel], kernel,
                min_degree: Optional[int] = None) -> complex:
    reference = f.models[0]
    degree = max(m.polynomial_degree for m in f.models) + max(m.polynomial_degree for m in models)
    degree = max(degree, get_settings().quadrature.min_compact_degree, min_degree or 0)
    nodes = reference.compact_quadrature(degree)
    s0 = reference.s0
    point_inv = point.inverse()
    return complex(sum(w * f.evaluate(u @ s0) * kernel(models, point_inv @ u) for u, w in nodes))


def _schur_kz(f: RegularFunction, h: GroupElement) -> complex:
    total = 0j
    for component in f.components.values():
        model, v = component.model, component.vector
        big_e = model.k_fixed_vector / model.bilinear(model.highest_vector, model.k_fixed_vector)
        total += (c_mu(model.space, model.mu) * model.bilinear(big_e, big_e)
                  * model.bilinear(model.rep_matrix(h.inverse()) @ v, model.highest_vector))
    return complex(total)


def _schur_kxi(psi: RegularFunction, g: GroupElement) -> complex:
    total = 0j
    for component in psi.components.values():
        model, v = component.model, component.vector
        big_u = model.highest_vector / model.s0_highest_pairing
        s0_u = model.rep_matrix(model.s0) @ big_u
        total += model.bilinear(s0_u, big_u) * model.bilinear(v, model.rep_matrix(g) @ model.e_tilde)
    return complex(total)


def _dispatch(f, point, truncation, method, kernel, schur, side: Side, min_degree: Optional[int] = None) -> complex:
    if f.side != side:
        raise ValidationError(f"kernel operator expects a {side.value}-side function",
                              {"side": f.side.value})
    models = _covering_models(f, truncation)
    method = KernelMethod(method)
    if method == KernelMethod.SCHUR:
        return schur(f, point)
    try:
        return _quadrature(f, point, models, kernel, min_degree)
    except UnsupportedError as e:
        if method == KernelMethod.QUADRATURE:
            raise
        logger.info(f"Haar rule unavailable ({e.message}); using the Schur evaluation")
        return schur(f, point)


@timed("kernel_operator_KZ")
def kernel_operator_KZ(f: RegularFunction, h: GroupElement, truncation: Optional[int] = None,
                       method: KernelMethod = KernelMethod.AUTO, min_degree: Optional[int] = None) -> complex:
    """K_Z f at the horocycle h·ξ₀; ``min_degree`` raises the U-rule degree."""
    return _dispatch(f, h, truncation, method, kernel_kZ, _schur_kz, Side.Z, min_degree)


@timed("kernel_operator_KXi")
def kernel_operator_KXi(psi: RegularFunction, g: GroupElement, truncation: Optional[int] = None,
                        method: KernelMethod = KernelMethod.AUTO, min_degree: Optional[int] = None) -> complex:
    """K_Ξ ψ at the point g·x₀."""
    return _dispatch(psi, g, truncation, method, kernel_kXi, _schur_kxi, Side.XI, min_degree)
