"""
Exact arithmetic for restricted root systems.

Weights are stored in the basis of simple roots of the nonmultipliable system
Σ₀ with ``fractions.Fraction`` coordinates. Each root system also carries an
orthogonal e-basis realization (a diagonal Gram matrix) that the catalog uses
to build roots and that restriction maps use to change level.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np
import sympy

from ..utils.error_handler import DataError, DimensionError, DomainError, InternalError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str, sympy.Rational]


def to_fraction(value: Scalar) -> Fraction:
    """Coerce ints, strings, sympy rationals and fractions to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Basic):
        rational = sympy.Rational(value)
        return Fraction(int(rational.p), int(rational.q))
    if isinstance(value, float):
        raise DataError("weights are exact; pass a Fraction or string instead of a float",
                        {"value": value})
    return Fraction(value)


@dataclass(frozen=True)
class Weight:
    """Linear functional on 𝔞 in simple-root coordinates."""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight"):
        if other.rank != self.rank:
            raise DimensionError("weights of different rank",
                                 {"left": self.rank, "right": other.rank})

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar: Scalar) -> "Weight":
        s = to_fraction(scalar)
        return Weight(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Weight":
        return self * (1 / to_fraction(scalar))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


Matrix = Tuple[Tuple[Fraction, ...], ...]


@lru_cache(maxsize=512)
def _invert_exact(matrix: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals."""
    size = len(matrix)
    rows = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise DataError("singular matrix", {"size": size, "column": col})
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor != 0:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[size:]) for row in rows)


@lru_cache(maxsize=512)
def _normal_inverse(columns: Matrix) -> Matrix:
    """(BᵀB)⁻¹ for the basis B whose columns are ``columns``."""
    normal = tuple(
        tuple(sum((x * y for x, y in zip(a, b) if x and y), Fraction(0)) for b in columns)
        for a in columns
    )
    return _invert_exact(normal)


def _solve_exact(columns: Matrix, rhs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Exact solution of a consistent, possibly overdetermined system B x = rhs."""
    inverse = _normal_inverse(columns)
    projected = [sum((x * y for x, y in zip(col, rhs) if x and y), Fraction(0)) for col in columns]
    solution = tuple(
        sum((a * b for a, b in zip(row, projected) if b), Fraction(0)) for row in inverse
    )
    image = [Fraction(0)] * len(rhs)
    for c, col in zip(solution, columns):
        if c:
            for i, x in enumerate(col):
                if x:
                    image[i] += c * x
    if any(a != b for a, b in zip(image, rhs)):
        raise DataError("vector is not in the span of the basis")
    return solution


@dataclass(frozen=True)
class RootSystemData:
    """Restricted root system Σ with its nonmultipliable subsystem Σ₀.

    ``e_roots`` lists the e-basis coordinates of every positive root, in the
    order of ``positive_roots``; ``e_gram`` is the diagonal of the e-basis
    inner product.
    """
    type_label: str
    rank: int
    e_gram: Tuple[Fraction, ...]
    e_roots: Tuple[Tuple[Fraction, ...], ...]
    e_simple: Tuple[Tuple[Fraction, ...], ...]
    e_full_simple: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Weight, ...] = field(init=False)
    nonmultipliable_roots: Tuple[Weight, ...] = field(init=False)
    simple_roots: Tuple[Weight, ...] = field(init=False)
    full_simple_roots: Tuple[Weight, ...] = field(init=False)
    gram: Tuple[Tuple[Fraction, ...], ...] = field(init=False)

    def __post_init__(self):
        if len(self.e_simple) != self.rank:
            raise DataError("simple roots do not match the rank",
                            {"rank": self.rank, "simple": len(self.e_simple)})
        e_roots = tuple(tuple(to_fraction(c) for c in r) for r in self.e_roots)
        object.__setattr__(self, "e_roots", e_roots)
        object.__setattr__(self, "e_gram", tuple(to_fraction(c) for c in self.e_gram))
        object.__setattr__(self, "e_simple", tuple(tuple(to_fraction(c) for c in r) for r in self.e_simple))
        object.__setattr__(self, "e_full_simple",
                           tuple(tuple(to_fraction(c) for c in r) for r in self.e_full_simple))

        positive = tuple(self.from_e(r) for r in e_roots)
        root_set = set(e_roots)
        nonmult = tuple(
            w for w, r in zip(positive, e_roots)
            if tuple(2 * c for c in r) not in root_set
        )
        simple = tuple(self.from_e(r) for r in self.e_simple)
        full_simple = tuple(self.from_e(r) for r in self.e_full_simple)

        gram = tuple(
            tuple(sum((w * x * y for w, x, y in zip(self.e_gram, a, b) if x and y), Fraction(0))
                  for b in self.e_simple)
            for a in self.e_simple
        )

        object.__setattr__(self, "positive_roots", positive)
        object.__setattr__(self, "nonmultipliable_roots", nonmult)
        object.__setattr__(self, "simple_roots", simple)
        object.__setattr__(self, "full_simple_roots", full_simple)
        object.__setattr__(self, "gram", gram)

        for w in positive:
            coords = self.full_simple_coordinates(w)
            if any(c.denominator != 1 or c < 0 for c in coords):
                raise DataError("positive root is not a nonnegative integer combination "
                                "of simple roots", {"root": str(w)})

    @property
    def e_dim(self) -> int:
        return len(self.e_gram)

    def from_e(self, vector: Sequence[Scalar]) -> Weight:
        """Simple-root coordinates of an e-basis vector in the span of the roots."""
        rhs = tuple(to_fraction(c) for c in vector)
        if len(rhs) != self.e_dim:
            raise DimensionError("vector length does not match the e-basis",
                                 {"given": len(rhs), "expected": self.e_dim})
        return Weight(_solve_exact(self.e_simple, rhs))

    def to_e(self, weight: Weight) -> Tuple[Fraction, ...]:
        if weight.rank != self.rank:
            raise DimensionError("weight rank does not match the root system",
                                 {"weight": weight.rank, "rank": self.rank})
        out = [Fraction(0)] * self.e_dim
        for c, root in zip(weight.coords, self.e_simple):
            for i, x in enumerate(root):
                out[i] += c * to_fraction(x)
        return tuple(out)

    def full_simple_coordinates(self, weight: Weight) -> Tuple[Fraction, ...]:
        """Coordinates in the simple roots of Σ (they differ from Σ₀ only for BC)."""
        return _solve_exact(self.e_full_simple, self.to_e(weight))

    def is_root(self, weight: Weight) -> bool:
        return weight in self.positive_roots or (-weight) in self.positive_roots


def inner_product(lam: Weight, mu: Weight, rs: RootSystemData) -> Fraction:
    """⟨λ, μ⟩ in the standard realization."""
    if lam.rank != rs.rank or mu.rank != rs.rank:
        raise DimensionError("rank mismatch in inner product",
                             {"lambda": lam.rank, "mu": mu.rank, "rank": rs.rank})
    total = Fraction(0)
    for i, a in enumerate(lam.coords):
        if a == 0:
            continue
        row = rs.gram[i]
        for j, b in enumerate(mu.coords):
            if b:
                total += a * row[j] * b
    return total


def coroot_pairing(lam: Weight, alpha: Weight, rs: RootSystemData) -> Fraction:
    """⟨λ, α⟩/⟨α, α⟩."""
    return inner_product(lam, alpha, rs) / inner_product(alpha, alpha, rs)


def fundamental_spherical_weights(rs: RootSystemData) -> List[Weight]:
    """ω₁..ω_r with ⟨ω_i, α_j⟩/⟨α_j, α_j⟩ = δ_ij for the simple roots of Σ₀."""
    try:
        inverse = _invert_exact(rs.gram)
    except DataError:
        raise InternalError("singular Gram matrix", {"type": rs.type_label, "rank": rs.rank})
    return [Weight(tuple(rs.gram[i][i] * x for x in inverse[i])) for i in range(rs.rank)]


def omega_coefficients(mu: Weight, rs: RootSystemData) -> Tuple[Fraction, ...]:
    """Coefficients k_s with μ = Σ k_s ω_s."""
    return tuple(coroot_pairing(mu, alpha, rs) for alpha in rs.simple_roots)


def weight_from_omega(coefficients: Iterable[Scalar], rs: RootSystemData) -> Weight:
    coefficients = [to_fraction(c) for c in coefficients]
    if len(coefficients) != rs.rank:
        raise DimensionError("wrong number of ω-coefficients",
                             {"given": len(coefficients), "rank": rs.rank})
    total = Weight.zero(rs.rank)
    for k, omega in zip(coefficients, fundamental_spherical_weights(rs)):
        if k:
            total = total + omega * k
    return total


def is_in_lambda_plus(mu: Weight, rs: RootSystemData) -> bool:
    """True iff ⟨μ, α⟩/⟨α, α⟩ is a nonnegative integer for every α ∈ Σ₀⁺."""
    for alpha in rs.nonmultipliable_roots:
        x = coroot_pairing(mu, alpha, rs)
        if x.denominator != 1 or x < 0:
            return False
    return True


def height(mu: Weight, rs: RootSystemData) -> Fraction:
    """Sum of the ω-coefficients of μ."""
    return sum(omega_coefficients(mu, rs), Fraction(0))


def dominance_leq(nu: Weight, mu: Weight, rs: RootSystemData) -> bool:
    """ν ≤ μ iff μ − ν is a nonnegative integer combination of positive roots."""
    coords = rs.full_simple_coordinates(mu - nu)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def simple_reflection(lam: Weight, index: int, rs: RootSystemData) -> Weight:
    alpha = rs.simple_roots[index]
    return lam - alpha * (2 * coroot_pairing(lam, alpha, rs))


def dominant_representative(lam: Weight, rs: RootSystemData) -> Weight:
    """Walk simple reflections until every simple pairing is nonnegative."""
    current = lam
    # each step lowers the number of positive roots pairing negatively by one
    for _ in range(len(rs.nonmultipliable_roots) + 1):
        for i, alpha in enumerate(rs.simple_roots):
            if coroot_pairing(current, alpha, rs) < 0:
                current = simple_reflection(current, i, rs)
                break
        else:
            return current
    raise InternalError("reflection walk did not terminate", {"weight": str(lam)})


def dual_weight(mu: Weight, rs: RootSystemData) -> Weight:
    """μ* = −w₀μ, the dominant Weyl conjugate of −μ."""
    if mu.rank != rs.rank:
        raise DimensionError("weight rank does not match the root system",
                             {"weight": mu.rank, "rank": rs.rank})
    return dominant_representative(-mu, rs)


def weyl_dim(full_positive_roots: Sequence[Weight], rho_g: Weight, mu: Weight,
             gram: Optional[Sequence[Sequence[Scalar]]] = None) -> int:
    """Weyl dimension product for a complex root system.

    Weights are given in an orthonormal basis unless ``gram`` is supplied.
    """
    n = rho_g.rank

    def dot(x: Weight, y: Weight) -> Fraction:
        if gram is None:
            return sum((a * b for a, b in zip(x.coords, y.coords)), Fraction(0))
        return sum((x.coords[i] * to_fraction(gram[i][j]) * y.coords[j]
                    for i in range(n) for j in range(n)), Fraction(0))

    value = Fraction(1)
    shifted = mu + rho_g
    for alpha in full_positive_roots:
        denominator = dot(rho_g, alpha)
        if denominator == 0:
            raise DataError("ρ is orthogonal to a positive root", {"root": str(alpha)})
        value *= dot(shifted, alpha) / denominator
    if value.denominator != 1:
        raise DataError("Weyl dimension is not an integer; check the full root data",
                        {"value": str(value)})
    return int(value)


def check_mu(mu: Weight, rs: RootSystemData) -> None:
    """Raise ``DomainError`` unless μ ∈ Λ⁺."""
    if mu.rank != rs.rank:
        raise DimensionError("weight rank does not match the root system",
                             {"weight": mu.rank, "rank": rs.rank})
    if not is_in_lambda_plus(mu, rs):
        raise DomainError("weight is not in Λ⁺", {"mu": str(mu), "type": rs.type_label})


def dominant_weights_up_to(rs: RootSystemData, max_height: int) -> List[Weight]:
    """Every μ ∈ Λ⁺ with ω-coefficients summing to at most ``max_height``, lowest first."""
    if max_height < 0:
        return []
    boxes = [c for c in product(range(max_height + 1), repeat=rs.rank) if sum(c) <= max_height]
    boxes.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    return [weight_from_omega(c, rs) for c in boxes]
