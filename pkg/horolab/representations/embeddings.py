"""
The G_j-maps V_{μ_j} → V_{μ_k} between propagated levels and their left inverses.

Harmonic levels: H_k(ℂ^{n+1}) ⊂ H_k(ℂ^{n'+1}) by literal inclusion of
polynomials, so a label is padded with zero exponents. Product levels: the
new factors carry the trivial representation and coordinates are unchanged.
Group elements embed as block-diag(g, I).
"""
from fractions import Fraction
from math import prod
from typing import List, Sequence
import logging

import numpy as np
import sympy
from scipy.linalg import block_diag

from .base import ModelKind, RepModel
from .harmonic import HarmonicPoly
from ..groups.element import GroupElement
from ..utils.error_handler import DimensionError, DomainError, UnsupportedError

logger = logging.getLogger(__name__)


def _require_compatible(lo: RepModel, hi: RepModel) -> None:
    if lo.kind != hi.kind:
        raise DomainError("models of different kinds", {"lo": lo.kind.value, "hi": hi.kind.value})
    if hi.space.rank < lo.space.rank or hi.size < lo.size:
        raise DomainError("target level is smaller than the source",
                          {"lo": lo.space.label, "hi": hi.space.label})
    lo_mu, hi_mu = lo.mu_coefficients, hi.mu_coefficients
    padded = lo_mu + (0,) * (len(hi_mu) - len(lo_mu))
    if hi_mu != padded:
        raise DomainError("weights do not form a propagated pair",
                          {"lo": list(lo_mu), "hi": list(hi_mu)})


def inclusion_indices(lo: RepModel, hi: RepModel) -> np.ndarray:
    """Index S with embed(v)[S] = v and zero elsewhere."""
    _require_compatible(lo, hi)
    if lo.kind == ModelKind.HarmonicPoly:
        pad = (0,) * (hi.n - lo.n)
        return np.array([hi.label_index(tuple(label) + pad) for label in lo.labels], dtype=int)
    if lo.kind == ModelKind.ProductModel:
        # trailing factors are one-dimensional
        return np.arange(lo.dimension)
    if lo.space != hi.space:
        raise UnsupportedError("binary-form models do not propagate", {"space": lo.space.label})
    return np.arange(lo.dimension)


def embed(lo: RepModel, hi: RepModel, v: np.ndarray) -> np.ndarray:
    """ι_{k,j}: π_lo(g)u_lo ↦ π_hi(g)u_hi."""
    v = lo._check_vector(v)
    out = np.zeros(hi.dimension, dtype=complex)
    out[inclusion_indices(lo, hi)] = v
    return out


def project(hi: RepModel, lo: RepModel, w: np.ndarray) -> np.ndarray:
    """proj_{j,k}: orthogonal projection onto the image of ``embed``."""
    w = hi._check_vector(w)
    index = inclusion_indices(lo, hi)
    if lo.kind != ModelKind.HarmonicPoly:
        return w[index].copy()
    gram = hi.bilinear_form
    return np.linalg.solve(gram[np.ix_(index, index)], (gram @ w)[index])


def project_exact(hi: HarmonicPoly, lo: HarmonicPoly, w: Sequence[Fraction]) -> List[Fraction]:
    """``project`` in exact rational arithmetic."""
    if len(w) != hi.dimension:
        raise DimensionError("vector does not match the model dimension",
                             {"dimension": hi.dimension, "length": len(w)})
    index = [int(i) for i in inclusion_indices(lo, hi)]
    gram = hi.bilinear_exact
    column = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, w)])
    rhs = (gram * column).extract(index, [0])
    solution = gram.extract(index, index).LUsolve(rhs)
    return [Fraction(int(x.p), int(x.q)) for x in solution]


def gamma_factor(lo: HarmonicPoly, hi: HarmonicPoly) -> Fraction:
    """γ with β_hi(ι v, ι w) = γ β_lo(v, w) for the normalized sphere measures."""
    _require_compatible(lo, hi)
    low, high = lo.n + 1, hi.n + 1
    k = lo.k
    return Fraction(prod(low + 2 * j for j in range(k)), prod(high + 2 * j for j in range(k)))


def embed_element(lo: RepModel, hi: RepModel, g: GroupElement) -> GroupElement:
    """block-diag(g, I) in the larger group."""
    if g.group != lo.group_tag:
        raise DomainError(f"element of {g.group} is not in {lo.group_tag}")
    padding = hi.size - lo.size
    matrix = block_diag(g.matrix, np.eye(padding)) if padding else g.matrix
    return GroupElement(matrix, hi.group_tag, g.level)
