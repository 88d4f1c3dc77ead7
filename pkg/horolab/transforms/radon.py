"""
Normalized Radon transform Γ, the dual Radon transform R* and the sphere
transforms R_a, R*_a at one level.

Every transform is evaluated two ways: in closed form through the K₀-average
P_K = ∫_K π(k) dk of the model, and by summing a Haar rule, so that one can
serve as the oracle for the other.
"""
from enum import Enum
from typing import Callable, Optional
import logging

import numpy as np

from ..groups.element import GroupElement
from ..representations.base import RepModel
from ..representations.functions import RegularFunction, Side
from ..utils.error_handler import ValidationError

logger = logging.getLogger(__name__)


class Method(str, Enum):
    EXACT = "exact"
    QUADRATURE = "quadrature"


def _require_side(f: RegularFunction, side: Side, operation: str) -> None:
    if f.side != side:
        raise ValidationError(f"{operation} expects a {side.value}-side function",
                              {"side": f.side.value})


def gamma(f: RegularFunction) -> RegularFunction:
    """Γ f_{v,μ} = ψ_{v,μ}."""
    _require_side(f, Side.Z, "Γ")
    return f.with_side(Side.XI)


def gamma_inv(psi: RegularFunction) -> RegularFunction:
    """Γ⁻¹ ψ_{v,μ} = f_{v,μ}."""
    _require_side(psi, Side.XI, "Γ⁻¹")
    return psi.with_side(Side.Z)


def c_mu_oracle(model: RepModel, tolerance: Optional[float] = None) -> float:
    """The constant c_μ with ∫_K π*(k)u*_μ dk = c_μ e*_μ."""
    return model.c_mu_oracle(tolerance)


def _k_average(model: RepModel, integrand: Callable[[GroupElement], complex]) -> complex:
    return complex(sum(w * integrand(k) for k, w in model.k_quadrature()))


def dual_radon(psi: RegularFunction, x: GroupElement, method: Method = Method.EXACT) -> complex:
    """R*ψ(x·x₀) = ∫_K ψ(xk·ξ₀) dk."""
    _require_side(psi, Side.XI, "R*")
    method = Method(method)
    total = 0j
    for component in psi.components.values():
        model, v = component.model, component.vector
        if method == Method.EXACT:
            total += model.u_star @ (model.k_projection @ (model.rep_matrix(x.inverse()) @ v))
        else:
            total += _k_average(model, lambda k: model.coeff_psi(v, x @ k))
    return complex(total)


def sphere_radon(f: RegularFunction, a: GroupElement, g: GroupElement,
                 method: Method = Method.EXACT) -> complex:
    """R_a f(g·S_a) = ∫_K f(gka·x₀) dk."""
    _require_side(f, Side.Z, "R_a")
    method = Method(method)
    total = 0j
    for component in f.components.values():
        model, v = component.model, component.vector
        if method == Method.EXACT:
            inner = model.k_projection @ (model.rep_matrix(g.inverse()) @ v)
            total += model.e_star @ (model.rep_matrix(a.inverse()) @ inner)
        else:
            total += _k_average(model, lambda k: model.coeff_f(v, g @ k @ a))
    return complex(total)


def sphere_radon_dual(phi: RegularFunction, a: GroupElement, g: GroupElement,
                      method: Method = Method.EXACT) -> complex:
    """R*_a φ(g·x₀) = ∫_K φ(gka⁻¹·x₀) dk, the average over the sphere of radius a⁻¹."""
    _require_side(phi, Side.Z, "R*_a")
    method = Method(method)
    a_inv = a.inverse()
    total = 0j
    for component in phi.components.values():
        model, w = component.model, component.vector
        if method == Method.EXACT:
            inner = model.k_projection @ (model.rep_matrix(g.inverse()) @ w)
            total += model.e_star @ (model.rep_matrix(a) @ inner)
        else:
            total += _k_average(model, lambda k: model.coeff_f(w, g @ k @ a_inv))
    return complex(total)


def compact_pairing(model: RepModel, left: Callable[[GroupElement], complex],
                    right: Callable[[GroupElement], complex], degree: int) -> complex:
    """∫_U F(u) H(u) du with a rule exact in total degree ``degree``."""
    return complex(sum(w * left(u) * right(u) for u, w in model.compact_quadrature(degree)))


def sphere_pairing(f: RegularFunction, phi: RegularFunction, a: GroupElement) -> dict:
    """Both sides of ⟨R_a f, φ⟩_U = ⟨f, R*_a φ⟩_U for a radius a in the compact torus."""
    models = f.models + phi.models
    if not models:
        return {"left": 0j, "right": 0j}
    model = models[0]
    degree = max(m.polynomial_degree for m in f.models or [model]) + \
        max(m.polynomial_degree for m in phi.models or [model])
    left = compact_pairing(model, lambda u: sphere_radon(f, a, u), phi.evaluate, degree)
    right = compact_pairing(model, f.evaluate, lambda u: sphere_radon_dual(phi, a, u), degree)
    logger.debug(f"sphere duality on {model.describe()}: {left} vs {right}")
    return {"left": left, "right": right, "nodes": len(model.compact_quadrature(degree))}
