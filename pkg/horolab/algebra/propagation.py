"""
Weight-lattice side of propagation: ι, restriction, stabilized sequences,
fiber minimality and the finite-rank classification.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from .catalog import Family, SpaceData, make_space, parse_family, propagates
from .roots import (
    Weight,
    check_mu,
    is_in_lambda_plus,
    omega_coefficients,
    to_fraction,
    weight_from_omega,
)
from ..utils.error_handler import DomainError, UnsupportedError, ValidationError

logger = logging.getLogger(__name__)


def _require_propagation(lo: SpaceData, hi: SpaceData) -> None:
    if not propagates(lo, hi):
        raise ValidationError(f"{hi.label} is not a propagation of {lo.label}",
                              {"lo": lo.label, "hi": hi.label})


def iota(mu: Weight, lo: SpaceData, hi: SpaceData) -> Weight:
    """ι: keep the ω-coefficients of μ and read them over ``hi``."""
    _require_propagation(lo, hi)
    check_mu(mu, lo.rs)
    coefficients = list(omega_coefficients(mu, lo.rs))
    coefficients += [Fraction(0)] * (hi.rank - lo.rank)
    return weight_from_omega(coefficients, hi.rs)


def restrict(mu: Weight, hi: SpaceData, lo: SpaceData) -> Weight:
    """μ|𝔞_lo in the coordinates of ``lo``.

    Constant-rank pairs share 𝔞, so restriction is the identity. For the
    A-series and for SL(2,R)^r the smaller Cartan subspace sits in the leading
    e-coordinates.
    """
    _require_propagation(lo, hi)
    if mu.rank != hi.rank:
        raise ValidationError("weight does not belong to the upper level",
                              {"weight": mu.rank, "rank": hi.rank})
    if lo.rank == hi.rank:
        return mu
    e_coords = hi.rs.to_e(mu)
    if hi.family == Family.SL_n_R:
        n = lo.params[0]
        head = list(e_coords[:n])
        mean = sum(head, Fraction(0)) / n
        return lo.rs.from_e([c - mean for c in head])
    if hi.family == Family.SL2_product:
        return lo.rs.from_e(list(e_coords[:lo.rank]))
    raise UnsupportedError(f"no cataloged realization of 𝔞_j ⊂ 𝔞_k for {lo.label} ⊂ {hi.label}",
                           {"family": hi.family.value})


def is_minimal_in_fiber(mu_lo: Weight, candidate: Weight, hi: SpaceData, lo: SpaceData) -> bool:
    """Brute-force search for a smaller dominant weight restricting to ``mu_lo``."""
    if restrict(candidate, hi, lo) != mu_lo:
        raise ValidationError("candidate does not restrict to the given weight",
                              {"candidate": str(candidate), "mu": str(mu_lo)})
    bounds = omega_coefficients(candidate, hi.rs)
    if any(b.denominator != 1 or b < 0 for b in bounds):
        return False
    ranges = [range(int(b) + 1) for b in bounds]
    target = tuple(int(b) for b in bounds)
    for coefficients in product(*ranges):
        if coefficients == target:
            continue
        nu = weight_from_omega(coefficients, hi.rs)
        if restrict(nu, hi, lo) == mu_lo:
            logger.debug(f"Fiber of {mu_lo} contains smaller weight {coefficients}")
            return False
    return True


def classify_limit(chain: Sequence[SpaceData]) -> Dict[str, Any]:
    """Finite-rank flag and family tag of a propagated chain."""
    if not chain:
        raise ValidationError("empty chain")
    for lo, hi in zip(chain, chain[1:]):
        _require_propagation(lo, hi)
    ranks = [s.rank for s in chain]
    finite = len(set(ranks)) == 1
    tag = None
    first, last = chain[0], chain[-1]
    if finite and first.family in (Family.SO_p_q, Family.SU_p_q, Family.Sp_p_q):
        if last.params[1] > first.params[1]:
            name = {"SO_p_q": "SO", "SU_p_q": "SU", "Sp_p_q": "Sp"}[first.family.value]
            tag = f"{name}({first.params[0]}+∞)"
    return {"finiteRank": finite, "familyTag": tag, "ranks": ranks}


@dataclass
class WeightSequence:
    """Stabilized weights μ_k = Σ k_s ω_{k,s} along a chain."""
    chain: List[SpaceData]
    coefficients: Tuple[int, ...]
    start_level: int = 0
    weights: List[Weight] = field(init=False)

    def __post_init__(self):
        base = self.chain[self.start_level]
        if len(self.coefficients) != base.rank:
            raise ValidationError("coefficient count must equal the starting rank",
                                  {"coefficients": list(self.coefficients), "rank": base.rank})
        if any(to_fraction(k) < 0 or to_fraction(k).denominator != 1 for k in self.coefficients):
            raise DomainError("ω-coefficients must be nonnegative integers",
                              {"coefficients": [str(k) for k in self.coefficients]})
        mu = weight_from_omega(self.coefficients, base.rs)
        self.weights = [mu]
        for lo, hi in zip(self.chain[self.start_level:], self.chain[self.start_level + 1:]):
            mu = iota(mu, lo, hi)
            self.weights.append(mu)

    def at(self, level_index: int) -> Weight:
        if level_index < self.start_level:
            raise ValidationError("level precedes the start of the sequence",
                                  {"level": level_index, "start": self.start_level})
        return self.weights[level_index - self.start_level]

    def is_dominant(self) -> bool:
        return all(is_in_lambda_plus(w, s.rs)
                   for w, s in zip(self.weights, self.chain[self.start_level:]))

    def restriction_defects(self) -> List[Tuple[int, int]]:
        """Level pairs (j, k) where r(μ_k) ≠ μ_j; empty for a valid sequence."""
        bad = []
        levels = range(self.start_level, len(self.chain))
        for j in levels:
            for k in levels:
                if k <= j:
                    continue
                try:
                    if restrict(self.at(k), self.chain[k], self.chain[j]) != self.at(j):
                        bad.append((j, k))
                except UnsupportedError:
                    continue
        return bad


def chain_from_levels(family, p: Optional[int], levels: Sequence[int]) -> List[SpaceData]:
    """Spaces of a one-parameter chain: SO/SU/Sp(p, n) or SL(n)/SL(2)^n."""
    family = parse_family(family)
    if family in (Family.SL_n_R, Family.SL2_product):
        return [make_space(family, (n,)) for n in levels]
    if p is None:
        raise ValidationError(f"{family.value} chains need p")
    return [make_space(family, (p, n)) for n in levels]
