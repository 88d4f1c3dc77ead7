"""
Finite-level checks of the limit statements along a propagated family.

Functions at level j are carried to level k by embedding their coefficient
vectors; points and group elements by block-diag(g, I). Each check returns a
plain dict report; the analyzers wrap them into CheckResults.
"""
from typing import Any, Dict, List, Optional, Sequence
import logging

import numpy as np
from scipy.linalg import null_space

from .family import PropagatedFamily
from ..analysis.cfunction import c_infinity, c_mu
from ..config import get_settings
from ..groups.element import GroupElement
from ..representations.base import RepModel
from ..representations.embeddings import embed
from ..representations.functions import Component, RegularFunction, Side, multiply_top
from ..transforms.kernels import kernel_operator_KZ
from ..transforms.radon import dual_radon, sphere_radon
from ..transforms.spheres import decreases_to_plateau, dual_a_power, scaled_noise_floor

logger = logging.getLogger(__name__)


def _relative(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1.0)


def _cauchy(sequence: Sequence[complex]) -> Optional[float]:
    if len(sequence) < 2:
        return None
    return float(abs(sequence[-1] - sequence[-2]))


def random_points(model: RepModel, rng: np.random.Generator, count: int,
                  scale: float = 0.7) -> List[GroupElement]:
    return [model.random_real(rng, scale) for _ in range(count)]


def gamma_commute_check(family: PropagatedFamily, j: int, k: int, v: np.ndarray,
                        points: Sequence[GroupElement]) -> Dict[str, Any]:
    """ι_{k,j}(Γ_j f_v) against Γ_k(ι_{k,j} f_v) on Ξ_j, plus the Z-side restriction."""
    lo, hi = family.model(j), family.model(k)
    w = family.embed(j, k, v)
    psi_error = z_error = 0.0
    for g in points:
        big = family.embed_element(j, k, g)
        psi_error = max(psi_error, _relative(hi.coeff_psi(w, big), lo.coeff_psi(v, g)))
        z_error = max(z_error, _relative(hi.coeff_f(w, big), lo.coeff_f(v, g)))
    return {"levels": [j, k], "maxError": max(psi_error, z_error),
            "psiError": psi_error, "zError": z_error, "points": len(points)}


def projective_evaluation_check(family: PropagatedFamily, j: int, v: np.ndarray,
                                points: Sequence[GroupElement]) -> Dict[str, Any]:
    """f_k(x) = f_j(x) for x ∈ Z_j along the compatible family f_k = f_{ι v}.

    ``levels`` counts the higher levels k > j compared against level j.
    """
    base = family.model(j)
    reference = [base.coeff_f(v, g) for g in points]
    worst = 0.0
    for k in range(j + 1, len(family)):
        model, w = family.model(k), family.embed(j, k, v)
        for g, value in zip(points, reference):
            worst = max(worst, abs(model.coeff_f(w, family.embed_element(j, k, g)) - value))
    return {"startLevel": j, "maxError": worst, "levels": len(family) - j - 1}


def graded_proj_check(family: PropagatedFamily, j: int, k: int, w: np.ndarray,
                      points: Sequence[GroupElement]) -> Dict[str, Any]:
    """proj_{j,k}∘ι_{k,j} = id and ψ_{w,μ_k}|_{Ξ_j} = ψ_{proj w,μ_j}."""
    family.require_finite_rank("graded_proj_check")
    lo, hi = family.model(j), family.model(k)
    projected = family.project(k, j, w)
    basis = np.eye(lo.dimension, dtype=complex)
    identity_error = max(float(np.max(np.abs(family.project(k, j, family.embed(j, k, e)) - e)))
                         for e in basis)
    restriction_error = 0.0
    for g in points:
        big = family.embed_element(j, k, g)
        restriction_error = max(restriction_error,
                                _relative(hi.coeff_psi(w, big), lo.coeff_psi(projected, g)))
    return {"levels": [j, k], "maxError": max(identity_error, restriction_error),
            "projEmbedError": identity_error, "restrictionError": restriction_error}


def kernel_limit_check(family: PropagatedFamily, j: int, v: np.ndarray, h: GroupElement,
                       method: str = "auto", truncation: Optional[int] = None,
                       min_degree: Optional[int] = None) -> Dict[str, Any]:
    """K_{Z_k}(ι f_v)(ι h) for k ≥ j: constant in k and equal to ψ_v(h)."""
    family.require_admissible("kernel_limit_check")
    base = family.model(j)
    target = base.coeff_psi(v, h)
    sequence = []
    for k in range(j, len(family)):
        f = RegularFunction.single(family.model(k), family.embed(j, k, v), Side.Z)
        sequence.append(kernel_operator_KZ(f, family.embed_element(j, k, h), truncation=truncation,
                                           method=method, min_degree=min_degree))
    spread = max(abs(x - sequence[0]) for x in sequence)
    return {
        "sequence": [complex(x).real for x in sequence],
        "stabilized": sequence[-1].real,
        "target": target.real,
        "spread": float(spread),
        "maxError": max(float(spread), _relative(sequence[-1], target)),
    }


def dual_radon_limit(family: PropagatedFamily, j: int, v: np.ndarray, x: GroupElement) -> Dict[str, Any]:
    """R*_k ψ_{ι v}(ι x) along the family against c(μ_k+ρ_k)·f_v(x)."""
    family.require_finite_rank("dual_radon_limit")
    family.require_admissible("dual_radon_limit")
    base = family.model(j)
    inverse_value = base.coeff_f(v, x)
    sequence, oracles, ratio_errors = [], [], []
    for k in range(j, len(family)):
        model = family.model(k)
        psi = RegularFunction.single(model, family.embed(j, k, v), Side.XI)
        value = dual_radon(psi, family.embed_element(j, k, x))
        oracle = model.c_mu_oracle()
        sequence.append(value)
        oracles.append(oracle)
        ratio_errors.append(_relative(value, oracle * inverse_value))
    c_report = c_infinity(family.chain[j:], family.weights.weights[j:])
    limit = c_report["limitEstimate"] * inverse_value
    return {
        "sequence": [complex(s).real for s in sequence],
        "oracleConstants": oracles,
        "cSequence": c_report["sequence"],
        "limitEstimate": complex(limit).real,
        "tailDifference": _cauchy(sequence),
        "converged": c_report["converged"],
        "maxError": max(ratio_errors),
    }


def sphere_radon_limit(family: PropagatedFamily, j: int, w: np.ndarray, t: float, g: GroupElement,
                       sweep: Sequence[float] = ()) -> Dict[str, Any]:
    """Sphere transforms along the family and the a → ∞ sweep at the top level.

    The sweep compares R_a f(g)/a^{μ*} with ⟨P_K π(g⁻¹)w, v⁺⟩, the dual Radon
    side it converges to.
    """
    family.require_finite_rank("sphere_radon_limit")
    family.require_admissible("sphere_radon_limit")
    sequence = []
    for k in range(j, len(family)):
        model = family.model(k)
        f = RegularFunction.single(model, family.embed(j, k, w), Side.Z)
        big_g = family.embed_element(j, k, g)
        sequence.append(sphere_radon(f, model.a_element(t), big_g))
    spread = max(abs(x - sequence[0]) for x in sequence)

    top = family.model(len(family) - 1)
    top_w = family.embed(j, len(family) - 1, w)
    top_g = family.embed_element(j, len(family) - 1, g)
    f_top = RegularFunction.single(top, top_w, Side.Z)
    target = complex(top.v_plus @ (top.k_projection @ (top.rep_matrix(top_g.inverse()) @ top_w)))
    tolerances = get_settings().tolerances
    scale = max(1.0, float(np.linalg.norm(top_w)))
    defects, noise = [], []
    for s in sweep:
        a, power = top.a_element(s), dual_a_power(top, s)
        defects.append(abs(sphere_radon(f_top, a, top_g) / power - target))
        noise.append(max(tolerances.roundoff, scale * scaled_noise_floor(top, a, power)))
    return {
        "sequence": [complex(x).real for x in sequence],
        "spread": float(spread),
        "tailDifference": _cauchy(sequence),
        "sweep": list(sweep),
        "sweepDefects": defects,
        "sweepMonotone": decreases_to_plateau(defects, noise, tolerances.cauchy * scale),
        "maxError": defects[-1] if defects else 0.0,
    }


def noncommuting_defect(family: PropagatedFamily, j: int, k: int, v: np.ndarray,
                        x: GroupElement) -> Dict[str, Any]:
    """ι(R*_j ψ_v)(x) = (c_{μ_j}/c_{μ_k})·R*_k(ι ψ_v)(ι x)."""
    family.require_finite_rank("noncommuting_defect")
    lo, hi = family.model(j), family.model(k)
    left = dual_radon(RegularFunction.single(lo, v, Side.XI), x)
    right = dual_radon(RegularFunction.single(hi, family.embed(j, k, v), Side.XI),
                       family.embed_element(j, k, x))
    ratio = lo.c_mu_oracle() / hi.c_mu_oracle()
    return {
        "levels": [j, k],
        "ratio": ratio,
        "gkRatio": c_mu(lo.space, lo.mu) / c_mu(hi.space, hi.mu),
        "left": complex(left).real,
        "right": complex(right).real,
        "maxError": _relative(left, ratio * right),
    }


def multiplicity_one_check(lo: RepModel, hi: RepModel, tol: Optional[float] = None) -> Dict[str, Any]:
    """dim Hom_{𝔤_lo}(V_lo, V_hi) by brute-force equivariance equations."""
    tol = tol or get_settings().tolerances.exact
    blocks = []
    for x in lo.compact_generators() + lo.positive_root_vectors():
        padded = np.zeros((hi.size, hi.size), dtype=complex)
        padded[:lo.size, :lo.size] = x
        a_hi, a_lo = hi.lie_action(padded), lo.lie_action(x)
        blocks.append(np.kron(a_hi, np.eye(lo.dimension)) - np.kron(np.eye(hi.dimension), a_lo.T))
    system = np.vstack(blocks)
    kernel = null_space(system, rcond=tol)
    return {"lo": lo.describe(), "hi": hi.describe(), "dimension": int(kernel.shape[1]),
            "unknowns": int(system.shape[1])}


def compatible_dual_dimension(family: PropagatedFamily, tol: Optional[float] = None) -> Dict[str, Any]:
    """Dimension of the K-invariant dual sequences (φ_j) with φ_{j+1}∘ι = φ_j."""
    tol = tol or get_settings().tolerances.exact
    models = family.models
    offsets = np.cumsum([0] + [m.dimension for m in models])
    total = int(offsets[-1])
    rows = []
    for index, model in enumerate(models):
        for x in model.compact_generators():
            block = np.zeros((model.dimension, total), dtype=complex)
            block[:, offsets[index]:offsets[index + 1]] = model.lie_action(x).T
            rows.append(block)
    for index in range(len(models) - 1):
        lo, hi = models[index], models[index + 1]
        embedding = np.column_stack([embed(lo, hi, e) for e in np.eye(lo.dimension)])
        block = np.zeros((lo.dimension, total), dtype=complex)
        block[:, offsets[index + 1]:offsets[index + 2]] = embedding.T
        block[:, offsets[index]:offsets[index + 1]] -= np.eye(lo.dimension)
        rows.append(block)
    kernel = null_space(np.vstack(rows), rcond=tol) if rows else np.eye(total)
    return {"levels": len(models), "dimension": int(kernel.shape[1]), "unknowns": total}


def graded_ring_check(left: RepModel, right: RepModel, rng: np.random.Generator,
                      samples: int = 10) -> Dict[str, Any]:
    """Γ(top(f·h)) = Γf·Γh for random components, checked pointwise."""
    v = rng.standard_normal(left.dimension) + 1j * rng.standard_normal(left.dimension)
    w = rng.standard_normal(right.dimension) + 1j * rng.standard_normal(right.dimension)
    top = multiply_top(Component(left, v), Component(right, w))
    worst = 0.0
    for g in random_points(left, rng, samples):
        product_value = left.coeff_psi(v, g) * right.coeff_psi(w, g)
        worst = max(worst, _relative(top.model.coeff_psi(top.vector, g), product_value))
    return {"mu": [list(left.mu_coefficients), list(right.mu_coefficients)],
            "topMu": list(top.model.mu_coefficients), "maxError": worst}
