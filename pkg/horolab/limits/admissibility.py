"""
Exact check of M_j = M_k ∩ G_j and N_j = G_j ∩ N_k at the Lie-algebra level.

Subspaces of 𝔤𝔩_N are column matrices of row-major flattened matrices; the
smaller level sits in the top-left corner of the larger one.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List
import logging

import sympy

from ..algebra.catalog import Family, SpaceData
from ..utils.error_handler import UnsupportedError

logger = logging.getLogger(__name__)


@dataclass
class LevelAlgebra:
    """𝔤, 𝔫 and 𝔪 of one level, as column spans in 𝔤𝔩_size."""
    size: int
    g: sympy.Matrix
    n: sympy.Matrix
    m: sympy.Matrix


def _unit(size: int, a: int, b: int) -> sympy.Matrix:
    x = sympy.zeros(size, size)
    x[a, b] = 1
    return x


def _columns(matrices: List[sympy.Matrix], size: int) -> sympy.Matrix:
    if not matrices:
        return sympy.zeros(size * size, 0)
    return sympy.Matrix.hstack(*[x.reshape(size * size, 1) for x in matrices])


def _basis(columns: sympy.Matrix) -> sympy.Matrix:
    if columns.cols == 0:
        return columns
    space = columns.columnspace()
    if not space:
        return sympy.zeros(columns.rows, 0)
    return sympy.Matrix.hstack(*space)


def _restricted(g: sympy.Matrix, condition: sympy.Matrix) -> sympy.Matrix:
    """Elements X ∈ span(g) with condition·vec(X) = 0."""
    kernel = (condition * g).nullspace()
    if not kernel:
        return sympy.zeros(g.rows, 0)
    return _basis(g * sympy.Matrix.hstack(*kernel))


def _ad_matrix(h: sympy.Matrix) -> sympy.Matrix:
    """vec(HX − XH) = L vec(X) for row-major vec."""
    size = h.rows
    out = sympy.zeros(size * size, size * size)
    for a in range(size):
        for b in range(size):
            row = a * size + b
            for c in range(size):
                if h[a, c]:
                    out[row, c * size + b] += h[a, c]
                if h[c, b]:
                    out[row, a * size + c] -= h[c, b]
    return out


def _antisymmetry(size: int) -> sympy.Matrix:
    """vec(X + Xᵀ) as a matrix acting on vec(X)."""
    out = sympy.eye(size * size)
    for a in range(size):
        for b in range(size):
            out[a * size + b, b * size + a] += 1
    return out


def _level_algebra(size: int, generators: List[sympy.Matrix], h: sympy.Matrix) -> LevelAlgebra:
    g = _basis(_columns(generators, size))
    ad = _ad_matrix(h)
    eigen = [x for x in h.eigenvals()]
    positive = sorted({a - b for a in eigen for b in eigen if a - b > 0})
    pieces = [_restricted(g, ad - lam * sympy.eye(size * size)) for lam in positive]
    pieces = [p for p in pieces if p.cols]
    n = _basis(sympy.Matrix.hstack(*pieces)) if pieces else sympy.zeros(size * size, 0)
    k = _restricted(g, _antisymmetry(size))
    m = _restricted(k, ad)
    return LevelAlgebra(size, g, n, m)


@lru_cache(maxsize=64)
def level_algebra(space: SpaceData) -> LevelAlgebra:
    """Matrix realization of 𝔤₀ with 𝔫₀ and 𝔪₀ for the modelled families."""
    if space.family == Family.SO_p_q and space.params[0] == 1:
        n = space.params[1]
        size = n + 1
        form = sympy.eye(size)
        form[1, 1] = -1
        generators = [form * (_unit(size, a, b) - _unit(size, b, a))
                      for a in range(size) for b in range(a + 1, size)]
        h = _unit(size, 0, 1) + _unit(size, 1, 0)
        return _level_algebra(size, generators, h)
    if space.family == Family.SL2_product:
        r = space.params[0]
        size = 2 * r
        generators, h = [], sympy.zeros(size, size)
        for j in range(r):
            a, b = 2 * j, 2 * j + 1
            generators += [_unit(size, a, b), _unit(size, b, a), _unit(size, a, a) - _unit(size, b, b)]
            # distinct weights make H regular in 𝔞₀
            h[a, a], h[b, b] = j + 1, -(j + 1)
        return _level_algebra(size, generators, h)
    raise UnsupportedError(f"no matrix realization of {space.label}", {"space": space.label})


def _pad(columns: sympy.Matrix, small: int, big: int) -> sympy.Matrix:
    out = sympy.zeros(big * big, columns.cols)
    for c in range(columns.cols):
        for a in range(small):
            for b in range(small):
                out[a * big + b, c] = columns[a * small + b, c]
    return out


def _rank(columns: sympy.Matrix) -> int:
    return columns.rank() if columns.cols else 0


def _intersection(a: sympy.Matrix, b: sympy.Matrix) -> sympy.Matrix:
    if a.cols == 0 or b.cols == 0:
        return sympy.zeros(a.rows, 0)
    kernel = sympy.Matrix.hstack(a, -b).nullspace()
    if not kernel:
        return sympy.zeros(a.rows, 0)
    return _basis(a * sympy.Matrix.hstack(*kernel)[:a.cols, :])


def _same_span(a: sympy.Matrix, b: sympy.Matrix) -> bool:
    ra, rb = _rank(a), _rank(b)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return sympy.Matrix.hstack(a, b).rank() == ra


def check_admissible(chain: List[SpaceData]) -> Dict[str, Any]:
    """Subspace identities for every consecutive pair of levels."""
    if len(chain) < 2:
        return {"admissible": True, "constantRank": True, "pairs": []}
    algebras = [level_algebra(space) for space in chain]
    pairs = []
    for (lo, a_lo), (hi, a_hi) in zip(zip(chain, algebras), zip(chain[1:], algebras[1:])):
        g_lo = _pad(a_lo.g, a_lo.size, a_hi.size)
        m_cap = _intersection(a_hi.m, g_lo)
        n_cap = _intersection(g_lo, a_hi.n)
        m_equal = _same_span(_pad(a_lo.m, a_lo.size, a_hi.size), m_cap)
        n_equal = _same_span(_pad(a_lo.n, a_lo.size, a_hi.size), n_cap)
        pairs.append({
            "lo": lo.label,
            "hi": hi.label,
            "mEqual": m_equal,
            "nEqual": n_equal,
            "dims": {"m_lo": _rank(a_lo.m), "m_cap": _rank(m_cap),
                     "n_lo": _rank(a_lo.n), "n_cap": _rank(n_cap)},
        })
        logger.debug(f"admissibility {lo.label} ⊂ {hi.label}: m {m_equal}, n {n_equal}")
    ranks = [s.rank for s in chain]
    return {
        "admissible": all(p["mEqual"] and p["nEqual"] for p in pairs),
        "constantRank": len(set(ranks)) == 1,
        "pairs": pairs,
    }
