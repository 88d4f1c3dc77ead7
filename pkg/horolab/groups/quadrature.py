"""
Haar quadrature on the small compact groups used by the models, and exact
monomial integration on spheres.

Rules return matrices in the group's own defining realization (2×2 for SO(2)
and SU(2), 3×3 for SO(3)); models embed them into their level group.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod
from typing import Callable, Iterator, List, Optional, Sequence, Tuple
import logging

import numpy as np

from .element import GroupElement
from .sl2 import rotation, su2_euler
from ..utils.error_handler import DimensionError, UnsupportedError, ValidationError

logger = logging.getLogger(__name__)


class HaarGroup(str, Enum):
    SO2 = "SO2"
    SU2 = "SU2"
    SO_n = "SO_n"
    SO_n_plus_1 = "SO_n_plus_1"


@dataclass(frozen=True)
class Quadrature:
    """Nodes and weights of a Haar rule; the weights sum to one."""
    group: str
    matrices: Tuple[np.ndarray, ...]
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self) -> Iterator[Tuple[np.ndarray, float]]:
        return iter(zip(self.matrices, self.weights))

    def elements(self, tag: Optional[str] = None) -> List[Tuple[GroupElement, float]]:
        """Nodes as ``GroupElement`` values with their weights."""
        tag = tag or self.group
        return [(GroupElement(m, tag), float(w)) for m, w in self]

    def integrate(self, func: Callable[[np.ndarray], complex]) -> complex:
        return sum(w * func(m) for m, w in self)


def _trapezoid(count: int, period: float) -> np.ndarray:
    return period * np.arange(count) / count


def _gauss_cos(count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre in x = cos β, returning β and weights normalized to 1."""
    x, w = np.polynomial.legendre.leggauss(count)
    return np.arccos(x), w / 2.0


def circle_rule(nodes: int) -> Quadrature:
    """Trapezoid rule on SO(2), exact below frequency ``nodes``."""
    thetas = _trapezoid(nodes, 2 * np.pi)
    return Quadrature("SO(2)", tuple(rotation(t) for t in thetas), np.full(nodes, 1.0 / nodes))


def su2_rule(degree: int) -> Quadrature:
    """Euler-angle product rule on SU(2), exact for polynomials of degree ≤ ``degree`` in the entries."""
    angles = _trapezoid(degree + 1, 4 * np.pi)
    betas, beta_weights = _gauss_cos(degree // 2 + 1)
    matrices, weights = [], []
    for a in angles:
        for b, wb in zip(betas, beta_weights):
            for c in angles:
                matrices.append(su2_euler(a, b, c))
                weights.append(wb)
    weights = np.asarray(weights)
    return Quadrature("SU(2)", tuple(matrices), weights / weights.sum())


def _rz(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _ry(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def so3_rule(degree: int) -> Quadrature:
    """ZYZ Euler-angle product rule on SO(3)."""
    angles = _trapezoid(degree + 1, 2 * np.pi)
    betas, beta_weights = _gauss_cos(degree // 2 + 1)
    matrices, weights = [], []
    for a in angles:
        for b, wb in zip(betas, beta_weights):
            for c in angles:
                matrices.append(_rz(a) @ _ry(b) @ _rz(c))
                weights.append(wb)
    weights = np.asarray(weights)
    return Quadrature("SO(3)", tuple(matrices), weights / weights.sum())


def _orthogonal_rule(size: int, order: int) -> Quadrature:
    if size == 1:
        return Quadrature("SO(1)", (np.eye(1),), np.ones(1))
    if size == 2:
        return circle_rule(max(order, 1) + 1)
    if size == 3:
        return so3_rule(order)
    raise UnsupportedError(f"no Haar rule for SO({size}); use exact sphere integration "
                           "or the Schur-reduced evaluation", {"size": size})


def haar_quadrature(group, order: int, n: Optional[int] = None) -> Quadrature:
    """Haar rule for ``group`` exact on integrands of polynomial degree ``order``.

    For ``SO2`` the order is the number of trapezoid nodes. ``SO_n`` and
    ``SO_n_plus_1`` need ``n``.
    """
    group = HaarGroup(group)
    if order < 1:
        raise ValidationError("quadrature order must be positive", {"order": order})
    if group == HaarGroup.SO2:
        return circle_rule(order)
    if group == HaarGroup.SU2:
        return su2_rule(order)
    if n is None:
        raise ValidationError(f"{group.value} needs the dimension n")
    size = n if group == HaarGroup.SO_n else n + 1
    rule = _orthogonal_rule(size, order)
    logger.debug(f"Haar rule {rule.group}: {len(rule)} nodes")
    return rule


def sphere_monomial_integral(exponents: Sequence[int], n: Optional[int] = None) -> Fraction:
    """∫ x^α dσ over S^{N-1} ⊂ ℝ^N with the normalized measure.

    Equals Π(α_i − 1)!! / (N(N+2)⋯(N+|α|−2)) when every α_i is even and zero
    otherwise. ``n`` is the sphere dimension, N = n + 1, when given.
    """
    exponents = [int(a) for a in exponents]
    if n is not None and len(exponents) != n + 1:
        raise DimensionError("S^n monomials have n+1 exponents",
                             {"n": n, "exponents": len(exponents)})
    if any(a < 0 for a in exponents):
        raise ValidationError("exponents must be nonnegative", {"exponents": exponents})
    if any(a % 2 for a in exponents):
        return Fraction(0)
    size = len(exponents)
    numerator = prod(prod(range(a - 1, 0, -2)) for a in exponents)
    denominator = prod(range(size, size + sum(exponents), 2))
    return Fraction(numerator, denominator)
