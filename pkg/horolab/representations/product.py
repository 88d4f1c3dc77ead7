"""
Outer tensor products of binary-form models for SL(2,R)^r.

Group elements are block-diagonal 2r×2r matrices. Tensor data is formed
lazily; the highest matrix coefficient f_μ factorizes and never needs it.
"""
from functools import cached_property, lru_cache, reduce
from itertools import product
from typing import List, Sequence, Tuple
import logging

import numpy as np
from scipy.linalg import block_diag

from .base import ModelKind, RepModel
from .sl2_spin import SL2Spin
from ..algebra.catalog import Family, SpaceData, make_space
from ..algebra.roots import Weight, omega_coefficients
from ..config import get_settings
from ..groups import sl2
from ..groups.element import GroupElement
from ..groups.quadrature import circle_rule, su2_rule
from ..utils.error_handler import DomainError, ResourceError, UnsupportedError, ValidationError

logger = logging.getLogger(__name__)

FACTOR_TAG = "SL(2,C)"


@lru_cache(maxsize=256)
def factor_model(k: int) -> SL2Spin:
    """The spin-k binary-form model of one SL(2,R) factor."""
    space = make_space(Family.SL2_product, (1,))
    return SL2Spin(space, space.rs.positive_roots[0] * k)


def _kron_all(arrays: Sequence[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, arrays)


class ProductModel(RepModel):
    """π_{k₁} ⊗ ... ⊗ π_{k_r} for μ = Σ k_j ω_j."""

    kind = ModelKind.ProductModel

    def __init__(self, space: SpaceData, mu: Weight):
        if space.family != Family.SL2_product:
            raise ValidationError("product models realize SL(2,R)^r levels", {"space": space.label})
        coefficients = omega_coefficients(mu, space.rs)
        if any(k.denominator != 1 or k < 0 for k in coefficients):
            raise DomainError("weight is not in Λ⁺", {"mu": str(mu)})
        self.r = space.rank
        super().__init__(space, mu, f"SL(2,C)^{self.r}", 2 * self.r)
        self.factors = [factor_model(int(k)) for k in coefficients]

    @property
    def factor_degrees(self) -> Tuple[int, ...]:
        return tuple(f.m for f in self.factors)

    @property
    def dimension(self) -> int:
        return int(np.prod([f.dimension for f in self.factors]))

    @property
    def labels(self) -> List[Tuple[str, ...]]:
        return list(product(*(f.labels for f in self.factors)))

    def _tensor(self, arrays: Sequence[np.ndarray]) -> np.ndarray:
        cap = get_settings().performance.max_model_dimension
        if self.dimension > cap:
            raise ResourceError("product model exceeds the dimension cap",
                                {"dimension": self.dimension, "cap": cap})
        return _kron_all(arrays)

    def blocks(self, matrix: np.ndarray, tol: float = 1e-12) -> List[np.ndarray]:
        matrix = np.asarray(matrix, dtype=complex)
        mask = np.kron(np.eye(self.r), np.ones((2, 2)))
        if np.max(np.abs(matrix * (1 - mask)), initial=0.0) > tol * max(1.0, np.max(np.abs(matrix))):
            raise DomainError("element is not block diagonal", {"group": self.group_tag})
        return [matrix[2 * j:2 * j + 2, 2 * j:2 * j + 2] for j in range(self.r)]

    def factor_elements(self, g: GroupElement) -> List[GroupElement]:
        return [GroupElement(b, FACTOR_TAG) for b in self.blocks(g.matrix)]

    def _action(self, matrix: np.ndarray) -> np.ndarray:
        return self._tensor([f._action(b) for f, b in zip(self.factors, self.blocks(matrix))])

    @cached_property
    def bilinear_form(self) -> np.ndarray:
        return self._tensor([f.bilinear_form for f in self.factors])

    @cached_property
    def hermitian_form(self) -> np.ndarray:
        return self._tensor([f.hermitian_form for f in self.factors])

    @cached_property
    def highest_vector(self) -> np.ndarray:
        return self._tensor([f.highest_vector for f in self.factors])

    @cached_property
    def k_fixed_vector(self) -> np.ndarray:
        return self._tensor([f.k_fixed_vector for f in self.factors])

    @cached_property
    def k_projection(self) -> np.ndarray:
        return self._tensor([f.k_projection for f in self.factors])

    def _diagonal(self, pieces: Sequence[np.ndarray]) -> GroupElement:
        return self.element(block_diag(*pieces))

    @cached_property
    def s0(self) -> GroupElement:
        return self._diagonal([sl2.CARTAN_SYMMETRY] * self.r)

    def _block_generator(self, j: int, x: np.ndarray) -> np.ndarray:
        out = np.zeros((self.size, self.size), dtype=complex)
        out[2 * j:2 * j + 2, 2 * j:2 * j + 2] = x
        return out

    def lie_action(self, generator: np.ndarray) -> np.ndarray:
        blocks = self.blocks(generator)
        total = np.zeros((self.dimension, self.dimension), dtype=complex)
        for j, (factor, block) in enumerate(zip(self.factors, blocks)):
            pieces = [np.eye(f.dimension) for f in self.factors]
            pieces[j] = factor.lie_action(block)
            total += self._tensor(pieces)
        return total

    def positive_root_vectors(self) -> List[np.ndarray]:
        return [self._block_generator(j, sl2.POSITIVE_ROOT_VECTOR) for j in range(self.r)]

    def compact_generators(self) -> List[np.ndarray]:
        return [self._block_generator(j, sl2.COMPACT_GENERATOR) for j in range(self.r)]

    def centralizer_generators(self) -> List[np.ndarray]:
        return []

    def _times(self, t) -> np.ndarray:
        t = np.ravel(np.asarray(t, dtype=float))
        if t.size == 1:
            t = np.full(self.r, t[0])
        if t.size != self.r:
            raise ValidationError("one torus parameter per factor", {"rank": self.r, "given": int(t.size)})
        return t

    def a_element(self, t) -> GroupElement:
        return self._diagonal([sl2.torus(x) for x in self._times(t)])

    def omega_exponents(self, t) -> np.ndarray:
        return 2.0 * self._times(t)

    def _real_blocks(self, g: GroupElement) -> List[np.ndarray]:
        if g.group != self.group_tag:
            raise DomainError(f"element of {g.group} is not in {self.group_tag}")
        blocks = self.blocks(g.matrix)
        if not all(sl2.is_real_sl2(b) for b in blocks):
            raise DomainError("element is not in SL(2,R)^r")
        return [b.real for b in blocks]

    def iwasawa(self, g: GroupElement) -> Tuple[GroupElement, GroupElement, GroupElement]:
        parts = [sl2.iwasawa(b) for b in self._real_blocks(g)]
        return (self._diagonal([p.k for p in parts]),
                self._diagonal([p.a for p in parts]),
                self._diagonal([p.n for p in parts]))

    def log_a_omega(self, g: GroupElement) -> np.ndarray:
        return np.array([2.0 * sl2.iwasawa(b).t for b in self._real_blocks(g)])

    def in_real_form(self, g: GroupElement) -> bool:
        try:
            self._real_blocks(g)
        except DomainError:
            return False
        return True

    def random_real(self, rng: np.random.Generator, scale: float = 1.0) -> GroupElement:
        return self._diagonal([sl2.random_element(rng, scale) for _ in range(self.r)])

    def random_compact(self, rng: np.random.Generator) -> GroupElement:
        return self._diagonal([sl2.random_su2(rng) for _ in range(self.r)])

    def random_k(self, rng: np.random.Generator) -> GroupElement:
        return self._diagonal([sl2.rotation(rng.uniform(0, 2 * np.pi)) for _ in range(self.r)])

    def compact_torus(self, theta) -> GroupElement:
        return self._diagonal([sl2.compact_torus(x) for x in self._times(theta)])

    def compact_quadrature(self, degree: int) -> List[Tuple[GroupElement, float]]:
        if self.r != 1:
            raise UnsupportedError("no product Haar rule on SU(2)^r for r > 1; use the Schur evaluation",
                                   {"rank": self.r})
        return su2_rule(degree).elements(self.group_tag)

    def k_quadrature(self) -> List[Tuple[GroupElement, float]]:
        nodes = get_settings().quadrature.min_circle_nodes
        rules = [list(circle_rule(max(f.m + 1, nodes))) for f in self.factors]
        out = []
        for nodes in product(*rules):
            weight = float(np.prod([w for _, w in nodes]))
            out.append((self._diagonal([m for m, _ in nodes]), weight))
        return out

    @property
    def polynomial_degree(self) -> int:
        return sum(self.factor_degrees)

    def f_highest(self, g: GroupElement) -> complex:
        return complex(np.prod([f.f_highest(x) for f, x in zip(self.factors, self.factor_elements(g))]))

    def weyl_data(self):
        size = 2 * self.r
        roots = []
        rho, highest = [], []
        for j, f in enumerate(self.factors):
            coords = [0] * size
            coords[2 * j], coords[2 * j + 1] = 1, -1
            roots.append(Weight(tuple(coords)))
            rho += ["1/2", "-1/2"]
            highest += [f.k, -f.k]
        return roots, Weight(tuple(rho)), Weight(tuple(highest)), None

    def to_dict(self):
        data = super().to_dict()
        data["factorDegrees"] = list(self.factor_degrees)
        return data
