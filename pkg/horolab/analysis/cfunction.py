"""
Harish-Chandra c-function through the Gindikin-Karpelevich product.

For an indivisible positive root α with multiplicities (m_α, m_2α) and
x = ⟨λ, α⟩/⟨α, α⟩ the factor is

    c_α(λ) = 2^{-x} Γ(x) / ( Γ((m_α/2 + 1 + x)/2) Γ((m_α/2 + m_2α + x)/2) )

and c(λ) is the product of the factors divided by the same product at ρ, so
that c(ρ) = 1.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import math

from scipy.special import gammaln, gammasgn

from ..algebra.catalog import SpaceData
from ..algebra.roots import (
    Scalar,
    Weight,
    check_mu,
    coroot_pairing,
    dominant_weights_up_to,
    omega_coefficients,
    to_fraction,
)
from ..config import get_settings
from ..utils.error_handler import DimensionError, DomainError, ValidationError

logger = logging.getLogger(__name__)

# Power of c(μ+ρ) that equals the K-average constant of u*_μ; fixed by
# c_mu_oracle on the harmonic models.
CALIBRATED_EXPONENT = Fraction(1)
ALLOWED_EXPONENTS = (Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class CValue:
    value: float
    log_value: float
    well_defined: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "logValue": self.log_value, "wellDefined": self.well_defined}


def _is_pole(x: Fraction) -> bool:
    return x <= 0 and x.denominator == 1


def _log_gamma(x: Fraction) -> Tuple[float, float]:
    """(log|Γ(x)|, sign Γ(x)) away from poles."""
    value = float(x)
    return float(gammaln(value)), float(gammasgn(value))


def _gk_product(space: SpaceData, lam: Weight) -> Tuple[float, float, str]:
    """Unnormalized log-product, its sign, and a pole marker.

    The marker is ``"numerator"`` when some Γ(x) has a pole, ``"denominator"``
    when a denominator Γ has one (the product vanishes), else ``""``.
    """
    log_total, sign = 0.0, 1.0
    zero = False
    for alpha, m_alpha, m_double in space.indivisible_roots():
        x = coroot_pairing(lam, alpha, space.rs)
        first = (Fraction(m_alpha, 2) + 1 + x) / 2
        second = (Fraction(m_alpha, 2) + m_double + x) / 2
        if _is_pole(x):
            return math.nan, math.nan, "numerator"
        if _is_pole(first) or _is_pole(second):
            zero = True
            continue
        num, num_sign = _log_gamma(x)
        den1, sign1 = _log_gamma(first)
        den2, sign2 = _log_gamma(second)
        log_total += -float(x) * math.log(2.0) + num - den1 - den2
        sign *= num_sign * sign1 * sign2
    return log_total, sign, "denominator" if zero else ""


def c_function(space: SpaceData, lam: Weight) -> CValue:
    """c(λ) normalized by c(ρ) = 1."""
    if lam.rank != space.rank:
        raise DimensionError("weight rank does not match the space",
                             {"weight": lam.rank, "rank": space.rank})
    log_lam, sign_lam, pole = _gk_product(space, lam)
    if pole == "numerator":
        logger.debug(f"c-function pole at {lam} on {space.label}")
        return CValue(math.nan, math.nan, False)
    if pole == "denominator":
        return CValue(0.0, -math.inf, True)
    log_rho, sign_rho, _ = _gk_product(space, space.rho)
    log_value = log_lam - log_rho
    return CValue(sign_lam * sign_rho * math.exp(log_value), log_value, True)


def _check_exponent(exponent: Scalar) -> Fraction:
    exponent = to_fraction(exponent)
    if exponent not in ALLOWED_EXPONENTS:
        raise ValidationError("exponent must be 1/2 or 1", {"exponent": str(exponent)})
    return exponent


def c_mu(space: SpaceData, mu: Weight, exponent: Scalar = CALIBRATED_EXPONENT) -> float:
    """c(μ+ρ) raised to ``exponent``."""
    exponent = _check_exponent(exponent)
    check_mu(mu, space.rs)
    c = c_function(space, mu + space.rho)
    if not c.well_defined or c.value <= 0:
        raise DomainError("c(μ+ρ) is not a positive number",
                          {"mu": str(mu), "space": space.label, "value": c.value})
    return c.value ** float(exponent)


def _aitken(s0: float, s1: float, s2: float) -> Optional[float]:
    denominator = s2 - 2 * s1 + s0
    if denominator == 0:
        return None
    return s2 - (s2 - s1) ** 2 / denominator


def c_infinity(chain: Sequence[SpaceData], mu_chain: Sequence[Weight],
               cauchy: Optional[float] = None, max_workers: Optional[int] = None) -> Dict[str, Any]:
    """Sequence c(μ_j+ρ_j) along a chain with a limit estimate.

    Converged means the last two terms differ by less than ``cauchy``; the
    estimate is then the last term, otherwise Aitken's extrapolation of the
    last three.
    """
    if len(chain) != len(mu_chain):
        raise ValidationError("chain and weight sequence differ in length",
                              {"levels": len(chain), "weights": len(mu_chain)})
    if not chain:
        raise ValidationError("empty chain")
    settings = get_settings()
    cauchy = settings.tolerances.cauchy if cauchy is None else cauchy
    workers = max_workers or settings.performance.max_workers

    with ThreadPoolExecutor(max_workers=workers) as executor:
        values = list(executor.map(lambda pair: c_function(pair[0], pair[1] + pair[0].rho),
                                   zip(chain, mu_chain)))

    for level, value in enumerate(values):
        if not value.well_defined:
            raise DomainError("c-function pole in the chain",
                              {"level": level, "space": chain[level].label})
    sequence = [v.value for v in values]
    differences = [abs(b - a) for a, b in zip(sequence, sequence[1:])]
    converged = bool(differences) and differences[-1] < cauchy
    estimate = sequence[-1]
    if not converged and len(sequence) >= 3:
        extrapolated = _aitken(*sequence[-3:])
        if extrapolated is not None:
            estimate = extrapolated
    logger.info(f"c_infinity over {len(sequence)} levels: last={sequence[-1]:.10g}, "
                f"converged={converged}")
    return {
        "sequence": sequence,
        "limitEstimate": estimate,
        "converged": converged,
        "tailDifference": differences[-1] if differences else None,
    }


def c_table(space: SpaceData, max_height: int) -> List[Dict[str, Any]]:
    """c(μ+ρ) for every μ ∈ Λ⁺ up to ``max_height``."""
    rows = []
    for mu in dominant_weights_up_to(space.rs, max_height):
        c = c_function(space, mu + space.rho)
        rows.append({
            "mu": [int(k) for k in omega_coefficients(mu, space.rs)],
            "cValue": c.value,
            "wellDefined": c.well_defined,
        })
    return rows
