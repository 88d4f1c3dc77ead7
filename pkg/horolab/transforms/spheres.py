"""
Spheres in Z, the truncated dual product ∏_μ ℂ[X]*_μ, and the embeddings of
points, spheres and horocycles into it.

A point of the dual product is stored as one dual vector φ_μ ∈ V*_μ per
weight; it pairs with a regular function by ⟨Σ f_{v_μ,μ}, (φ_μ)⟩ = Σ φ_μᵀ v_μ.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence
import logging

import numpy as np

from ..algebra.roots import dual_weight, omega_coefficients
from ..config import get_settings
from ..groups.element import GroupElement
from ..representations.base import RepModel
from ..representations.functions import MuKey, RegularFunction
from ..utils.error_handler import DimensionError, ValidationError

logger = logging.getLogger(__name__)


def canonical_radius(model: RepModel, t) -> np.ndarray:
    """Dominant-chamber representative of the torus parameter.

    The little Weyl group of every modelled level acts on each coordinate of
    𝔞₀ by a sign.
    """
    return np.abs(np.ravel(np.asarray(t, dtype=float)))


def in_k(model: RepModel, g: GroupElement, tol: Optional[float] = None) -> bool:
    tol = tol or get_settings().tolerances.exact
    _, a, n = model.iwasawa(g)
    identity = model.identity()
    return a.distance(identity) < tol and n.distance(identity) < tol


@dataclass(frozen=True, eq=False)
class GroupSphere:
    """The sphere S_a(g·x₀) = gKa·x₀ with a = a_element(radius)."""
    model: RepModel
    center: GroupElement
    radius: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "radius", canonical_radius(self.model, self.radius))

    @property
    def radius_element(self) -> GroupElement:
        return self.model.a_element(self.radius)

    def same_as(self, other: "GroupSphere", tol: Optional[float] = None) -> bool:
        tol = tol or get_settings().tolerances.exact
        if self.radius.shape != other.radius.shape or np.max(np.abs(self.radius - other.radius)) > tol:
            return False
        return in_k(self.model, self.center.inverse() @ other.center, tol)


@dataclass
class DualCoefficients:
    """A point of the truncated product ∏_μ ℂ[X]*_μ."""
    vectors: Dict[MuKey, np.ndarray] = field(default_factory=dict)
    models: Dict[MuKey, RepModel] = field(default_factory=dict)

    @property
    def truncation(self) -> List[MuKey]:
        return sorted(self.vectors)

    def pair(self, f: RegularFunction) -> complex:
        total = 0j
        for key, component in f.components.items():
            if key not in self.vectors:
                raise ValidationError("function has a component outside the truncation",
                                      {"mu": list(key), "truncation": [list(k) for k in self.truncation]})
            total += self.vectors[key] @ component.vector
        return complex(total)

    def distance(self, other: "DualCoefficients") -> Dict[MuKey, float]:
        if set(self.vectors) != set(other.vectors):
            raise DimensionError("dual points over different truncations")
        return {key: self.models[key].dual_norm(self.vectors[key] - other.vectors[key])
                for key in self.truncation}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "truncation": [list(k) for k in self.truncation],
            "vectors": {",".join(map(str, k)): [[float(x.real), float(x.imag)] for x in self.vectors[k]]
                        for k in self.truncation},
        }


class EmbeddingKind(str, Enum):
    IOTA_E = "iota_e"
    IOTA_A = "iota_a"
    IOTA = "iota"


def dual_a_power(model: RepModel, t) -> float:
    """a^{μ*} at a_element(t)."""
    mu_star = dual_weight(model.mu, model.space.rs)
    coefficients = [int(c) for c in omega_coefficients(mu_star, model.space.rs)]
    return model.a_power(t, coefficients)


def embedding_coeffs(kind: EmbeddingKind, models: Sequence[RepModel], g: Optional[GroupElement] = None,
                     t=None) -> DualCoefficients:
    """ι_e(g·x₀), ι_a(g·S_a) or ι(g·ξ₀) in the truncated dual product.

    ι_e uses v⁰_μ = e*_μ, ι_a the scaled π*(a)e*_μ/a^{μ*} and ι the highest
    weight dual vectors v⁺_μ.
    """
    kind = EmbeddingKind(kind)
    if kind == EmbeddingKind.IOTA_A and t is None:
        raise ValidationError("ι_a needs a radius")
    point = DualCoefficients()
    for model in models:
        h = g if g is not None else model.identity()
        if kind == EmbeddingKind.IOTA_E:
            phi = model.e_star
        elif kind == EmbeddingKind.IOTA_A:
            radius = canonical_radius(model, t)
            phi = model.dual_action(model.a_element(radius), model.e_star) / dual_a_power(model, radius)
        else:
            phi = model.v_plus
        key = model.mu_coefficients
        point.vectors[key] = model.dual_action(h, phi)
        point.models[key] = model
    return point


def _decay_rate(ts: Sequence[float], distances: Sequence[float], floor: float) -> Optional[float]:
    points = [(t, np.log(d)) for t, d in zip(ts, distances) if d > floor]
    if len(points) < 2:
        return None
    slope = np.polyfit([p[0] for p in points], [p[1] for p in points], 1)[0]
    return float(-slope)


def scaled_noise_floor(model: RepModel, a: GroupElement, power: float) -> float:
    """Forward roundoff bound of π*(a)e*/a^{μ*}: ε·d·‖|π*(a)|·|e*|‖ / a^{μ*}."""
    matrix = model.rep_matrix(a.inverse()).T
    magnitude = np.linalg.norm(np.abs(matrix) @ np.abs(model.e_star))
    return float(np.finfo(float).eps * model.dimension * magnitude / power)


def decreases_to_plateau(distances: Sequence[float], noise: Sequence[float], plateau: float) -> bool:
    """Non-increasing up to noise until the distance falls below ``plateau``, then stays below it."""
    for i in range(1, len(distances)):
        if distances[i - 1] < plateau:
            if distances[i] >= plateau:
                return False
            continue
        if distances[i] > distances[i - 1] + max(noise[i - 1], noise[i]):
            return False
    return True


def sphere_to_horosphere_limit(models: Iterable[RepModel], ts: Sequence[float]) -> Dict[str, Any]:
    """Distances ‖π*(a_t)v⁰_μ/a^{μ*} − v⁺_μ‖ along a ray in the dominant chamber.

    Once a distance drops below ``tolerances.cauchy`` the remaining ones only
    have to stay below it; before that each step may rise by at most the
    roundoff bound of the scaled vector, which grows with a^{μ*}.
    """
    tolerances = get_settings().tolerances
    rows = []
    for model in models:
        distances, pairings, noise = [], [], []
        for t in ts:
            a = model.a_element(t)
            power = dual_a_power(model, t)
            scaled = model.dual_action(a, model.e_star) / power
            distances.append(model.dual_norm(scaled - model.v_plus))
            pairings.append(complex(model.lowest_vector @ scaled))
            noise.append(max(tolerances.roundoff, scaled_noise_floor(model, a, power)))
        rows.append({
            "mu": list(model.mu_coefficients),
            "distances": distances,
            "noiseFloor": noise,
            "pairings": [p.real for p in pairings],
            "maxPairingDefect": max((abs(p - 1) for p in pairings), default=0.0),
            "monotone": decreases_to_plateau(distances, noise, tolerances.cauchy),
            "decayRate": _decay_rate(ts, distances, max(noise, default=tolerances.roundoff)),
        })
    converged = all(r["monotone"] and (not r["distances"] or r["distances"][-1] < tolerances.cauchy)
                    for r in rows)
    return {"ts": list(ts), "components": rows, "converged": converged}
