"""
SL(2,C) acting on binary forms of degree m.

Coordinate i is the coefficient of x^i y^{m−i} and π(g)P(v) = P(gᵀv). The
form x^m is the highest weight vector; (x² + y²)^{m/2} is K-fixed.
"""
from functools import cached_property
from math import comb
from typing import List, Tuple
import logging

import numpy as np

from .base import ModelKind, RepModel
from ..algebra.catalog import SpaceData
from ..algebra.roots import Weight, omega_coefficients
from ..config import get_settings
from ..groups import sl2
from ..groups.element import GroupElement
from ..groups.quadrature import circle_rule, su2_rule
from ..utils.error_handler import DomainError, ValidationError

logger = logging.getLogger(__name__)

GROUP_TAG = "SL(2,C)"


def binary_form_action(matrix: np.ndarray, m: int) -> np.ndarray:
    """Matrix of P ↦ P(gᵀ ·) on degree-m binary forms."""
    g = np.asarray(matrix, dtype=complex)
    lx = np.array([g[1, 0], g[0, 0]])
    ly = np.array([g[1, 1], g[0, 1]])
    powers_x = [np.ones(1, dtype=complex)]
    powers_y = [np.ones(1, dtype=complex)]
    for _ in range(m):
        powers_x.append(np.convolve(powers_x[-1], lx))
        powers_y.append(np.convolve(powers_y[-1], ly))
    out = np.empty((m + 1, m + 1), dtype=complex)
    for i in range(m + 1):
        out[:, i] = np.convolve(powers_x[i], powers_y[m - i])
    return out


def binary_form_derivation(generator: np.ndarray, m: int) -> np.ndarray:
    x = np.asarray(generator, dtype=complex)
    out = np.zeros((m + 1, m + 1), dtype=complex)
    for i in range(m + 1):
        out[i, i] += i * x[0, 0] + (m - i) * x[1, 1]
        if i > 0:
            out[i - 1, i] += i * x[1, 0]
        if i < m:
            out[i + 1, i] += (m - i) * x[0, 1]
    return out


class SL2Spin(RepModel):
    """Spin-(m/2) model of SL(2,R) ⊂ SL(2,C); spherical when m is even."""

    kind = ModelKind.SL2Spin

    def __init__(self, space: SpaceData, mu: Weight):
        if space.rank != 1:
            raise ValidationError("SL2Spin models rank-one spaces", {"space": space.label})
        k = omega_coefficients(mu, space.rs)[0]
        if k.denominator != 1 or k < 0:
            raise DomainError("weight is not in Λ⁺", {"mu": str(mu)})
        super().__init__(space, mu, GROUP_TAG, 2)
        self.k = int(k)
        self.m = 2 * self.k

    @classmethod
    def from_degree(cls, space: SpaceData, m: int) -> "SL2Spin":
        """Model on degree-m forms; odd m has no K-fixed vector."""
        if m % 2:
            raise DomainError("odd-degree binary forms are not spherical", {"m": m})
        alpha = space.rs.positive_roots[0]
        return cls(space, alpha * (m // 2))

    @property
    def labels(self) -> List[str]:
        return [f"x^{i}y^{self.m - i}" for i in range(self.m + 1)]

    def _action(self, matrix: np.ndarray) -> np.ndarray:
        return binary_form_action(matrix, self.m)

    @cached_property
    def bilinear_form(self) -> np.ndarray:
        m = self.m
        beta = np.zeros((m + 1, m + 1), dtype=complex)
        for i in range(m + 1):
            beta[i, m - i] = (-1) ** i / comb(m, i)
        return beta

    @cached_property
    def hermitian_form(self) -> np.ndarray:
        return np.diag([1.0 / comb(self.m, i) for i in range(self.m + 1)]).astype(complex)

    @cached_property
    def highest_vector(self) -> np.ndarray:
        u = np.zeros(self.m + 1, dtype=complex)
        u[self.m] = 1.0
        return u

    @cached_property
    def k_fixed_vector(self) -> np.ndarray:
        e = np.zeros(self.m + 1, dtype=complex)
        for l in range(self.k + 1):
            e[2 * l] = comb(self.k, l)
        return e

    @cached_property
    def k_projection(self) -> np.ndarray:
        rule = circle_rule(self.m + 1)
        return sum(w * self._action(r) for r, w in rule)

    @cached_property
    def s0(self) -> GroupElement:
        return self.element(sl2.CARTAN_SYMMETRY)

    def lie_action(self, generator: np.ndarray) -> np.ndarray:
        return binary_form_derivation(generator, self.m)

    def positive_root_vectors(self) -> List[np.ndarray]:
        return [sl2.POSITIVE_ROOT_VECTOR]

    def compact_generators(self) -> List[np.ndarray]:
        return [sl2.COMPACT_GENERATOR]

    def centralizer_generators(self) -> List[np.ndarray]:
        return []

    def a_element(self, t) -> GroupElement:
        return self.element(sl2.torus(float(np.ravel([t])[0])))

    def omega_exponents(self, t) -> np.ndarray:
        return np.array([2.0 * float(np.ravel([t])[0])])

    def _real_matrix(self, g: GroupElement) -> np.ndarray:
        if g.group != self.group_tag or not sl2.is_real_sl2(g.matrix):
            raise DomainError("element is not in SL(2,R)", {"group": g.group})
        return g.matrix.real

    def iwasawa(self, g: GroupElement) -> Tuple[GroupElement, GroupElement, GroupElement]:
        parts = sl2.iwasawa(self._real_matrix(g))
        return self.element(parts.k), self.element(parts.a), self.element(parts.n)

    def log_a_omega(self, g: GroupElement) -> np.ndarray:
        return np.array([2.0 * sl2.iwasawa(self._real_matrix(g)).t])

    def in_real_form(self, g: GroupElement) -> bool:
        return g.group == self.group_tag and sl2.is_real_sl2(g.matrix)

    def random_real(self, rng: np.random.Generator, scale: float = 1.0) -> GroupElement:
        return self.element(sl2.random_element(rng, scale))

    def random_compact(self, rng: np.random.Generator) -> GroupElement:
        return self.element(sl2.random_su2(rng))

    def random_k(self, rng: np.random.Generator) -> GroupElement:
        return self.element(sl2.rotation(rng.uniform(0, 2 * np.pi)))

    def compact_torus(self, theta) -> GroupElement:
        return self.element(sl2.compact_torus(float(np.ravel([theta])[0])))

    def compact_quadrature(self, degree: int) -> List[Tuple[GroupElement, float]]:
        return su2_rule(degree).elements(self.group_tag)

    def k_quadrature(self) -> List[Tuple[GroupElement, float]]:
        return circle_rule(max(self.m + 1, get_settings().quadrature.min_circle_nodes)).elements(self.group_tag)

    @property
    def polynomial_degree(self) -> int:
        return self.m

    def weyl_data(self):
        root = Weight((1, -1))
        rho = Weight(("1/2", "-1/2"))
        highest = Weight((self.k, -self.k))
        return [root], rho, highest, None

    def to_dict(self):
        data = super().to_dict()
        data["degree"] = self.m
        return data
