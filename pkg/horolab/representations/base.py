"""
Common interface of the explicit spherical representation models.

Dual vectors are coordinate vectors φ with the pairing ⟨v, φ⟩ = φᵀv, so the
contragredient action is π*(g)φ = π(g⁻¹)ᵀφ. Every model carries a
G-invariant symmetric bilinear form β (π(g)ᵀβπ(g) = β) used to turn vectors
into dual vectors, and a U-invariant Hermitian form used for norms.
"""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from ..algebra.catalog import SpaceData
from ..algebra.roots import Weight, omega_coefficients, weyl_dim
from ..config import get_settings
from ..groups.element import GroupElement
from ..utils.error_handler import ConventionError, DimensionError, DomainError

logger = logging.getLogger(__name__)


class ModelKind(str, Enum):
    SL2Spin = "SL2Spin"
    HarmonicPoly = "HarmonicPoly"
    ProductModel = "ProductModel"


class RepModel(ABC):
    """A finite-dimensional spherical representation π_μ of a complex group G."""

    kind: ModelKind

    def __init__(self, space: SpaceData, mu: Weight, group_tag: str, size: int):
        self.space = space
        self.mu = mu
        self.group_tag = group_tag
        self.size = size

    # model data

    @property
    @abstractmethod
    def labels(self) -> List[Any]:
        """Basis labels, one per coordinate."""

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @abstractmethod
    def _action(self, matrix: np.ndarray) -> np.ndarray:
        """π(g) for a matrix in the defining realization."""

    @property
    @abstractmethod
    def bilinear_form(self) -> np.ndarray:
        """β with π(g)ᵀβπ(g) = β."""

    @property
    @abstractmethod
    def hermitian_form(self) -> np.ndarray:
        """h with π(u)* h π(u) = h on the compact form U."""

    @property
    @abstractmethod
    def highest_vector(self) -> np.ndarray:
        """u_μ, fixed by M and N, of weight μ."""

    @property
    @abstractmethod
    def k_fixed_vector(self) -> np.ndarray:
        """A nonzero K-fixed vector, before normalization."""

    @property
    @abstractmethod
    def k_projection(self) -> np.ndarray:
        """∫_K π(k) dk."""

    @property
    @abstractmethod
    def s0(self) -> GroupElement:
        """Representative in K of the longest Weyl group element."""

    @abstractmethod
    def lie_action(self, generator: np.ndarray) -> np.ndarray:
        """dπ(X) for X in the complex Lie algebra."""

    @abstractmethod
    def positive_root_vectors(self) -> List[np.ndarray]:
        """Spanning set of 𝔫."""

    @abstractmethod
    def compact_generators(self) -> List[np.ndarray]:
        """Spanning set of 𝔨."""

    @abstractmethod
    def centralizer_generators(self) -> List[np.ndarray]:
        """Spanning set of 𝔪."""

    @abstractmethod
    def a_element(self, t) -> GroupElement:
        """exp of a point of 𝔞₀; ``t`` has one entry per rank."""

    @abstractmethod
    def omega_exponents(self, t) -> np.ndarray:
        """log a^{ω_j} for ``a_element(t)``."""

    @abstractmethod
    def iwasawa(self, g: GroupElement) -> Tuple[GroupElement, GroupElement, GroupElement]:
        """g = k a n for g in the real form G₀."""

    @abstractmethod
    def log_a_omega(self, g: GroupElement) -> np.ndarray:
        """log a(g)^{ω_j} for the KAN decomposition of g ∈ G₀."""

    @abstractmethod
    def in_real_form(self, g: GroupElement) -> bool:
        """Membership in G₀."""

    @abstractmethod
    def random_real(self, rng: np.random.Generator, scale: float = 1.0) -> GroupElement:
        """A random element of G₀."""

    @abstractmethod
    def random_compact(self, rng: np.random.Generator) -> GroupElement:
        """A random element of the compact form U."""

    @abstractmethod
    def random_k(self, rng: np.random.Generator) -> GroupElement:
        """A random element of K₀."""

    @abstractmethod
    def compact_torus(self, theta) -> GroupElement:
        """exp(iθH) ∈ U for H ∈ 𝔞₀."""

    @abstractmethod
    def compact_quadrature(self, degree: int) -> List[Tuple[GroupElement, float]]:
        """Haar rule on U exact for matrix coefficients of total degree ``degree``."""

    @abstractmethod
    def k_quadrature(self) -> List[Tuple[GroupElement, float]]:
        """Haar rule on K₀ exact on the matrix coefficients of this model."""

    @property
    @abstractmethod
    def polynomial_degree(self) -> int:
        """Degree of the entries of π(u) as polynomials in the entries of u ∈ U."""

    @abstractmethod
    def weyl_data(self) -> Tuple[List[Weight], Weight, Weight, Optional[Sequence[Sequence[Any]]]]:
        """(full positive roots, ρ_𝔤, highest weight, gram) of the complex group."""

    # group elements

    def element(self, matrix: np.ndarray) -> GroupElement:
        return GroupElement(matrix, self.group_tag)

    def identity(self) -> GroupElement:
        return GroupElement.identity(self.size, self.group_tag)

    def rep_matrix(self, g: GroupElement) -> np.ndarray:
        """π_μ(g)."""
        if g.group != self.group_tag or g.size != self.size:
            raise DomainError(f"element of {g.group} does not act in a model of {self.group_tag}",
                              {"group": g.group, "expected": self.group_tag})
        return self._action(g.matrix)

    def dual_action(self, g: GroupElement, phi: np.ndarray) -> np.ndarray:
        """π*(g)φ = π(g⁻¹)ᵀφ."""
        return self.rep_matrix(g.inverse()).T @ phi

    @property
    def mu_coefficients(self) -> Tuple[int, ...]:
        return tuple(int(k) for k in omega_coefficients(self.mu, self.space.rs))

    def a_power(self, t, weight_coefficients: Optional[Sequence[int]] = None) -> float:
        """a^μ (or a^ν for the given ω-coefficients) at ``a_element(t)``."""
        coefficients = self.mu_coefficients if weight_coefficients is None else weight_coefficients
        return float(np.exp(np.dot(coefficients, self.omega_exponents(t))))

    # distinguished vectors

    def _check_vector(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        if v.shape != (self.dimension,):
            raise DimensionError("vector does not match the model dimension",
                                 {"dimension": self.dimension, "shape": list(v.shape)})
        return v

    @cached_property
    def s0_highest_pairing(self) -> complex:
        """β(π(s₀)u, u)."""
        u = self.highest_vector
        return complex((self.rep_matrix(self.s0) @ u) @ self.bilinear_form @ u)

    @cached_property
    def u_star(self) -> np.ndarray:
        """MN-fixed dual vector with ⟨π(s₀)u, u*⟩ = 1."""
        return self.bilinear_form @ self.highest_vector / self.s0_highest_pairing

    @cached_property
    def e_star(self) -> np.ndarray:
        """K-fixed dual vector with ⟨u, e*⟩ = 1."""
        beta_e = self.bilinear_form @ self.k_fixed_vector
        return beta_e / (self.highest_vector @ beta_e)

    @cached_property
    def e_unit(self) -> np.ndarray:
        """Unit K-fixed vector with ⟨e, e*⟩ > 0."""
        e = self.k_fixed_vector
        pairing = e @ self.e_star
        phase = np.conj(pairing) / abs(pairing)
        return phase * e / np.sqrt(self.hermitian(e, e).real)

    @cached_property
    def e_tilde(self) -> np.ndarray:
        """K-fixed vector with ⟨ẽ, u*⟩ = 1."""
        e = self.k_fixed_vector
        return e / (e @ self.u_star)

    @cached_property
    def lowest_vector(self) -> np.ndarray:
        """w⁻ = π(s₀⁻¹)u normalized by ⟨w⁻, e*⟩ = 1."""
        w = self.rep_matrix(self.s0.inverse()) @ self.highest_vector
        return w / (w @ self.e_star)

    @cached_property
    def v_plus(self) -> np.ndarray:
        """Highest-weight dual vector with ⟨w⁻, v⁺⟩ = 1."""
        return self.u_star / (self.lowest_vector @ self.u_star)

    @cached_property
    def v_minus(self) -> np.ndarray:
        """Lowest-weight dual vector with ⟨u, v⁻⟩ = 1."""
        phi = self.dual_action(self.s0, self.v_plus)
        return phi / (self.highest_vector @ phi)

    # forms and norms

    def hermitian(self, x: np.ndarray, y: np.ndarray) -> complex:
        return complex(np.conj(x) @ self.hermitian_form @ y)

    def bilinear(self, x: np.ndarray, y: np.ndarray) -> complex:
        return complex(x @ self.bilinear_form @ y)

    def dual_norm(self, phi: np.ndarray) -> float:
        """Norm of φ ∈ V* dual to the Hermitian form."""
        phi = self._check_vector(phi)
        return float(np.sqrt(max(np.real(np.conj(phi) @ np.linalg.solve(self.hermitian_form, phi)), 0.0)))

    # matrix coefficients

    def coeff_f(self, v: np.ndarray, g: GroupElement) -> complex:
        """f_{v,μ}(g·x₀) = ⟨v, π*(g)e*⟩."""
        v = self._check_vector(v)
        return complex(self.e_star @ (self.rep_matrix(g.inverse()) @ v))

    def coeff_psi(self, v: np.ndarray, g: GroupElement) -> complex:
        """ψ_{v,μ}(g·ξ₀) = ⟨v, π*(g)u*⟩."""
        v = self._check_vector(v)
        return complex(self.u_star @ (self.rep_matrix(g.inverse()) @ v))

    def f_highest(self, g: GroupElement) -> complex:
        """f_μ = f_{u_μ,μ}."""
        return self.coeff_f(self.highest_vector, g)

    def zonal(self, g: GroupElement) -> complex:
        """f⁰_μ(g) = ⟨π(g)e, e*⟩/⟨e, e*⟩."""
        e = self.e_unit
        return complex(self.e_star @ (self.rep_matrix(g) @ e) / (self.e_star @ e))

    # constants

    def k_average_dual(self, phi: np.ndarray) -> np.ndarray:
        """∫_K π*(k)φ dk."""
        return self.k_projection.T @ phi

    def c_mu_oracle(self, tolerance: Optional[float] = None) -> float:
        """c_μ with ∫_K π*(k)u* dk = c_μ e*, checked for proportionality."""
        tolerance = tolerance or get_settings().tolerances.proportionality
        average = self.k_average_dual(self.u_star)
        e_star = self.e_star
        c = np.vdot(e_star, average) / np.vdot(e_star, e_star)
        residual = np.linalg.norm(average - c * e_star) / max(np.linalg.norm(average), 1e-300)
        if residual > tolerance:
            raise ConventionError("K-average of u* is not proportional to e*",
                                  {"model": self.describe(), "residual": float(residual)})
        if abs(c.imag) > tolerance * max(1.0, abs(c)):
            raise ConventionError("K-average constant is not real",
                                  {"model": self.describe(), "value": str(c)})
        return float(c.real)

    def c_mu_cosine(self) -> float:
        """|h(u, e)|²/h(u, u) for the unit K-fixed vector e."""
        u = self.highest_vector
        return float(abs(self.hermitian(u, self.e_unit)) ** 2 / self.hermitian(u, u).real)

    def weyl_dimension(self) -> int:
        roots, rho, mu, gram = self.weyl_data()
        return weyl_dim(roots, rho, mu, gram)

    # metadata

    def describe(self) -> str:
        return f"{self.kind.value}[{self.space.label}, μ={self.mu_coefficients}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "space": self.space.label,
            "mu": list(self.mu_coefficients),
            "dimension": self.dimension,
            "group": self.group_tag,
        }
