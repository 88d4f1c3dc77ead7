"""
Homogeneous polynomials in coefficient form.

Numerical code works with coefficient vectors over the monomials of one
degree; exact code works with ``{exponent tuple: Fraction}`` dictionaries.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Sequence, Tuple
import logging

import numpy as np

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
ExactPoly = Dict[Exponent, Fraction]


@dataclass(frozen=True)
class MonomialSpace:
    nvars: int
    degree: int
    exponents: Tuple[Exponent, ...]
    index: Dict[Exponent, int]

    def __len__(self) -> int:
        return len(self.exponents)


def _exponent(nvars: int, combo: Sequence[int]) -> Exponent:
    out = [0] * nvars
    for i in combo:
        out[i] += 1
    return tuple(out)


@lru_cache(maxsize=128)
def monomial_space(nvars: int, degree: int) -> MonomialSpace:
    """Monomials of total degree ``degree`` in lexicographically decreasing order."""
    exponents = sorted({_exponent(nvars, c)
                        for c in combinations_with_replacement(range(nvars), degree)},
                       reverse=True)
    exponents = tuple(exponents)
    return MonomialSpace(nvars, degree, exponents, {e: i for i, e in enumerate(exponents)})


@lru_cache(maxsize=128)
def _tables(nvars: int, degree: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Parent index, parent variable and multiplication table between degrees d-1 and d.

    The parent of α is α − e_i for the first i with α_i > 0; ``mult[γ, j]`` is
    the index of γ + e_j.
    """
    lower, upper = monomial_space(nvars, degree - 1), monomial_space(nvars, degree)
    parents = np.empty(len(upper), dtype=int)
    variables = np.empty(len(upper), dtype=int)
    for a, alpha in enumerate(upper.exponents):
        i = next(k for k, e in enumerate(alpha) if e)
        parent = list(alpha)
        parent[i] -= 1
        parents[a] = lower.index[tuple(parent)]
        variables[a] = i
    mult = np.empty((len(lower), nvars), dtype=int)
    for g, gamma in enumerate(lower.exponents):
        for j in range(nvars):
            child = list(gamma)
            child[j] += 1
            mult[g, j] = upper.index[tuple(child)]
    return parents, variables, mult


def substitution_matrix(matrix: np.ndarray, degree: int) -> np.ndarray:
    """S(A) with coeffs(P∘A) = S(A) coeffs(P) on degree-``degree`` polynomials."""
    matrix = np.asarray(matrix, dtype=complex)
    nvars = matrix.shape[0]
    current = np.ones((1, 1), dtype=complex)
    for d in range(1, degree + 1):
        parents, variables, mult = _tables(nvars, d)
        inherited = current[:, parents]
        size = len(monomial_space(nvars, d))
        nxt = np.zeros((size, size), dtype=complex)
        for j in range(nvars):
            nxt[mult[:, j], :] += inherited * matrix[variables, j][None, :]
        current = nxt
    return current


def derivation_matrix(generator: np.ndarray, degree: int) -> np.ndarray:
    """Matrix of P ↦ −Σ X_ij x_j ∂_i P, the derivative of P ↦ P∘exp(−tX)."""
    generator = np.asarray(generator, dtype=complex)
    nvars = generator.shape[0]
    space = monomial_space(nvars, degree)
    out = np.zeros((len(space), len(space)), dtype=complex)
    nonzero = list(zip(*np.nonzero(generator)))
    for a, alpha in enumerate(space.exponents):
        for i, j in nonzero:
            if not alpha[i]:
                continue
            target = list(alpha)
            target[i] -= 1
            target[j] += 1
            out[space.index[tuple(target)], a] -= generator[i, j] * alpha[i]
    return out


def poly_add(p: ExactPoly, q: ExactPoly, scale: Fraction = Fraction(1)) -> ExactPoly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) + scale * c
    return {e: c for e, c in out.items() if c != 0}


def poly_mul(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    out: ExactPoly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def poly_laplacian(p: ExactPoly, variables: Iterable[int]) -> ExactPoly:
    """Σ_{i ∈ variables} ∂_i² p."""
    variables = tuple(variables)
    out: ExactPoly = {}
    for e, c in p.items():
        for i in variables:
            if e[i] < 2:
                continue
            target = list(e)
            target[i] -= 2
            target = tuple(target)
            out[target] = out.get(target, Fraction(0)) + c * e[i] * (e[i] - 1)
    return {e: c for e, c in out.items() if c != 0}


def sum_of_squares_power(nvars: int, variables: Iterable[int], power: int) -> ExactPoly:
    """(Σ_{i ∈ variables} x_i²)^power."""
    square: ExactPoly = {}
    for i in variables:
        e = [0] * nvars
        e[i] = 2
        square[tuple(e)] = Fraction(1)
    out: ExactPoly = {(0,) * nvars: Fraction(1)}
    for _ in range(power):
        out = poly_mul(out, square)
    return out


def to_vector(p: ExactPoly, space: MonomialSpace) -> np.ndarray:
    out = np.zeros(len(space), dtype=complex)
    for e, c in p.items():
        out[space.index[e]] = float(c)
    return out
