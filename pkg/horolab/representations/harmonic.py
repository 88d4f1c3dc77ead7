"""
Harmonic polynomials of degree k on ℂ^{n+1} as a model of SO(n+1,C) ⊃ SO₀(n,1).

Real Lorentz matrices act after the conjugation of ``groups.lorentz`` (time
axis at index 1). A harmonic polynomial is determined by its coefficients at
the monomials x^α with α₀ ≤ 1; those coefficients are the coordinates, and the
basis polynomial for the label α is

    h_α = Σ_j (−1)^j x₀^{2j+α₀} Δ'^j(x'^{α'}) / (2j+α₀)!

with Δ' the Laplacian in x₁..x_n. π(g)P(x) = P(g⁻¹x). The highest weight
vector is (x₀ + i x₁)^k and the K₀-fixed line is spanned by the K₀-average of
h at the label x₁^k.
"""
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Dict, List, Tuple
import logging

import numpy as np
import sympy

from .base import ModelKind, RepModel
from .polynomials import (
    ExactPoly,
    Exponent,
    derivation_matrix,
    monomial_space,
    poly_add,
    poly_laplacian,
    poly_mul,
    substitution_matrix,
    sum_of_squares_power,
)
from ..algebra.catalog import Family, SpaceData
from ..algebra.roots import Weight, omega_coefficients
from ..groups import lorentz
from ..groups.element import GroupElement
from ..groups.quadrature import HaarGroup, haar_quadrature, sphere_monomial_integral
from ..utils.error_handler import DomainError, ValidationError

logger = logging.getLogger(__name__)


def harmonic_dimension(n: int, k: int) -> int:
    """dim H_k(ℝ^{n+1}) = C(n+k, n) − C(n+k−2, n)."""
    return comb(n + k, n) - (comb(n + k - 2, n) if k >= 2 else 0)


@lru_cache(maxsize=64)
def harmonic_basis(n: int, k: int) -> Tuple[Tuple[Exponent, ...], Tuple[ExactPoly, ...]]:
    """Labels and exact basis polynomials h_α."""
    space = monomial_space(n + 1, k)
    labels = tuple(e for e in space.exponents if e[0] <= 1)
    spatial = range(1, n + 1)
    polys = []
    for alpha in labels:
        eps = alpha[0]
        tail = {(0,) + alpha[1:]: Fraction(1)}
        h: ExactPoly = {}
        j = 0
        while tail:
            x0 = [0] * (n + 1)
            x0[0] = 2 * j + eps
            h = poly_add(h, poly_mul({tuple(x0): Fraction(1)}, tail),
                         Fraction((-1) ** j, factorial(2 * j + eps)))
            tail = poly_laplacian(tail, spatial)
            j += 1
        polys.append(h)
    return labels, tuple(polys)


@lru_cache(maxsize=4096)
def _sphere_integral(exponents: Exponent) -> Fraction:
    return sphere_monomial_integral(exponents)


def _k_average(poly: ExactPoly, n: int) -> ExactPoly:
    """Average over K₀ = SO(n) acting on the coordinates {0, 2, ..., n}."""
    spatial = lorentz.spatial_indices(n)
    out: ExactPoly = {}
    for e, c in poly.items():
        degree_s = sum(e[i] for i in spatial)
        if degree_s % 2:
            continue
        weight = _sphere_integral(tuple(e[i] for i in spatial))
        if weight == 0:
            continue
        x1 = [0] * (n + 1)
        x1[lorentz.TIME] = e[lorentz.TIME]
        term = poly_mul({tuple(x1): c * weight},
                        sum_of_squares_power(n + 1, spatial, degree_s // 2))
        out = poly_add(out, term)
    return out


def _so_generator(size: int, a: int, b: int) -> np.ndarray:
    x = np.zeros((size, size))
    x[a, b] = 1.0
    x[b, a] = -1.0
    return x


class HarmonicPoly(RepModel):
    """H_k(ℂ^{n+1}) for the level SO(1,n), i.e. the hyperbolic space H^n."""

    kind = ModelKind.HarmonicPoly

    def __init__(self, space: SpaceData, mu: Weight):
        if space.family != Family.SO_p_q or space.params[0] != 1:
            raise ValidationError("harmonic models realize SO(1,n) levels", {"space": space.label})
        k = omega_coefficients(mu, space.rs)[0]
        if k.denominator != 1 or k < 0:
            raise DomainError("weight is not in Λ⁺", {"mu": str(mu)})
        self.n = space.params[1]
        self.k = int(k)
        super().__init__(space, mu, f"SO({self.n + 1},C)", self.n + 1)
        self.monomials = monomial_space(self.n + 1, self.k)
        self._labels, self._polys = harmonic_basis(self.n, self.k)
        self.select = np.array([self.monomials.index[e] for e in self._labels], dtype=int)
        self._label_index: Dict[Exponent, int] = {e: i for i, e in enumerate(self._labels)}
        # our index -> position in (x₁, ..., x_{n+1}) with x_{n+1} the time axis
        # and the boost in the (x_n, x_{n+1}) plane
        self.alignment = tuple([self.n - 1, self.n] + list(range(self.n - 1)))

    @property
    def labels(self) -> List[Exponent]:
        return list(self._labels)

    def label_index(self, label: Exponent) -> int:
        return self._label_index[label]

    @cached_property
    def basis_matrix(self) -> np.ndarray:
        """Columns are the h_α in monomial coordinates."""
        out = np.zeros((len(self.monomials), self.dimension), dtype=complex)
        for col, poly in enumerate(self._polys):
            for e, c in poly.items():
                out[self.monomials.index[e], col] = float(c)
        return out

    def coordinates(self, poly: ExactPoly) -> List[Fraction]:
        """Coordinates of a harmonic polynomial: its coefficients at the labels."""
        return [poly.get(e, Fraction(0)) for e in self._labels]

    def _action(self, matrix: np.ndarray) -> np.ndarray:
        substitution = substitution_matrix(np.linalg.inv(matrix), self.k)
        return (substitution @ self.basis_matrix)[self.select]

    @cached_property
    def bilinear_exact(self) -> sympy.Matrix:
        """Gram matrix of the h_α for ∫_{S^n} P Q dσ, exact."""
        d = self.dimension
        out = sympy.zeros(d, d)
        for a in range(d):
            for b in range(a, d):
                total = Fraction(0)
                for e1, c1 in self._polys[a].items():
                    for e2, c2 in self._polys[b].items():
                        total += c1 * c2 * _sphere_integral(tuple(x + y for x, y in zip(e1, e2)))
                out[a, b] = out[b, a] = sympy.Rational(total.numerator, total.denominator)
        return out

    @cached_property
    def bilinear_form(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.bilinear_exact.tolist()], dtype=complex)

    @property
    def hermitian_form(self) -> np.ndarray:
        # real coefficients: the L² form is both bilinear and Hermitian
        return self.bilinear_form

    @cached_property
    def highest_vector(self) -> np.ndarray:
        u = np.zeros(self.dimension, dtype=complex)
        top = [0] * (self.n + 1)
        top[lorentz.TIME] = self.k
        u[self._label_index[tuple(top)]] = 1j ** self.k
        if self.k:
            second = list(top)
            second[0], second[lorentz.TIME] = 1, self.k - 1
            u[self._label_index[tuple(second)]] = self.k * 1j ** (self.k - 1)
        return u

    @cached_property
    def k_projection_exact(self) -> List[List[Fraction]]:
        columns = [self.coordinates(_k_average(poly, self.n)) for poly in self._polys]
        return [[columns[j][i] for j in range(self.dimension)] for i in range(self.dimension)]

    @cached_property
    def k_projection(self) -> np.ndarray:
        return np.array([[float(c) for c in row] for row in self.k_projection_exact], dtype=complex)

    @cached_property
    def k_fixed_vector(self) -> np.ndarray:
        top = [0] * (self.n + 1)
        top[lorentz.TIME] = self.k
        return self.k_projection[:, self._label_index[tuple(top)]].copy()

    @cached_property
    def s0(self) -> GroupElement:
        return self.element(lorentz.to_complex(lorentz.weyl_representative(self.n)))

    def lie_action(self, generator: np.ndarray) -> np.ndarray:
        return (derivation_matrix(generator, self.k) @ self.basis_matrix)[self.select]

    def positive_root_vectors(self) -> List[np.ndarray]:
        d = lorentz.complexifier(self.n)
        d_inv = np.linalg.inv(d)
        out = []
        for j in range(self.n - 1):
            v = np.zeros(self.n - 1)
            v[j] = 1.0
            out.append(d @ lorentz.nilpotent_generator(self.n, v) @ d_inv)
        return out

    def compact_generators(self) -> List[np.ndarray]:
        idx = lorentz.spatial_indices(self.n)
        return [_so_generator(self.size, a, b) for i, a in enumerate(idx) for b in idx[i + 1:]]

    def centralizer_generators(self) -> List[np.ndarray]:
        idx = list(range(2, self.n + 1))
        return [_so_generator(self.size, a, b) for i, a in enumerate(idx) for b in idx[i + 1:]]

    def a_element(self, t) -> GroupElement:
        return self.element(lorentz.to_complex(lorentz.boost(self.n, float(np.ravel([t])[0]))))

    def omega_exponents(self, t) -> np.ndarray:
        return np.array([float(np.ravel([t])[0])])

    def _real_matrix(self, g: GroupElement) -> np.ndarray:
        if g.group != self.group_tag:
            raise DomainError(f"element of {g.group} is not in {self.group_tag}")
        return lorentz.from_complex(g.matrix)

    def iwasawa(self, g: GroupElement) -> Tuple[GroupElement, GroupElement, GroupElement]:
        parts = lorentz.iwasawa(self._real_matrix(g))
        return tuple(self.element(lorentz.to_complex(x)) for x in (parts.k, parts.a, parts.n))

    def log_a_omega(self, g: GroupElement) -> np.ndarray:
        return np.array([lorentz.iwasawa(self._real_matrix(g)).s])

    def in_real_form(self, g: GroupElement) -> bool:
        try:
            return lorentz.is_lorentz(self._real_matrix(g))
        except DomainError:
            return False

    def random_real(self, rng: np.random.Generator, scale: float = 1.0) -> GroupElement:
        return self.element(lorentz.to_complex(lorentz.random_element(self.n, rng, scale)))

    def random_compact(self, rng: np.random.Generator) -> GroupElement:
        return self.element(lorentz.random_rotation(self.n + 1, rng))

    def random_k(self, rng: np.random.Generator) -> GroupElement:
        return self.element(lorentz.spatial_rotation(self.n, lorentz.random_rotation(self.n, rng)))

    def compact_torus(self, theta) -> GroupElement:
        """exp(iθH): a real rotation of the (x₀, x₁) plane."""
        theta = float(np.ravel([theta])[0])
        g = np.eye(self.size)
        g[0, 0] = g[1, 1] = np.cos(theta)
        g[0, 1] = np.sin(theta)
        g[1, 0] = -np.sin(theta)
        return self.element(g)

    def compact_quadrature(self, degree: int) -> List[Tuple[GroupElement, float]]:
        return haar_quadrature(HaarGroup.SO_n_plus_1, degree, self.n).elements(self.group_tag)

    def k_quadrature(self) -> List[Tuple[GroupElement, float]]:
        rule = haar_quadrature(HaarGroup.SO_n, max(self.k, 1), self.n)
        return [(self.element(lorentz.spatial_rotation(self.n, r)), float(w)) for r, w in rule]

    @property
    def polynomial_degree(self) -> int:
        return self.k

    def weyl_data(self):
        size = self.n + 1
        l = size // 2
        roots = []
        for i in range(l):
            for j in range(i + 1, l):
                for sign in (-1, 1):
                    coords = [0] * l
                    coords[i], coords[j] = 1, sign
                    roots.append(Weight(tuple(coords)))
        if size % 2:
            for i in range(l):
                coords = [0] * l
                coords[i] = 1
                roots.append(Weight(tuple(coords)))
            rho = Weight(tuple(Fraction(2 * (l - i) - 1, 2) for i in range(l)))
        else:
            rho = Weight(tuple(l - 1 - i for i in range(l)))
        highest = Weight(tuple([self.k] + [0] * (l - 1)))
        return roots, rho, highest, None

    def to_dict(self):
        data = super().to_dict()
        data.update({"n": self.n, "degree": self.k, "alignment": list(self.alignment)})
        return data
