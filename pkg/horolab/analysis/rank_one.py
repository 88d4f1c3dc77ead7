"""
Direct N̄-integral for the c-function of SO₀(q,1).

c(λ) = ∫_{N̄} a(n̄)^{-(λ+ρ)} dn̄ / ∫_{N̄} a(n̄)^{-2ρ} dn̄, where a(n̄) is the
A-factor of the KAN decomposition. N̄ ≅ ℝ^{q-1} and the integrand is radial,
so both integrals reduce to one-dimensional ones in r = |v|.
"""
from typing import Optional
import logging

import numpy as np
from scipy.integrate import quad

from ..algebra.catalog import Family, SpaceData
from ..algebra.roots import Weight, coroot_pairing
from ..config import get_settings
from ..groups import lorentz
from ..utils.error_handler import DimensionError, DomainError, UnsupportedError

logger = logging.getLogger(__name__)


def a_alpha_opposite(n: int, r: float) -> float:
    """a(n̄_v)^α for |v| = r, taken from the Iwasawa decomposition."""
    v = np.zeros(n - 1)
    v[0] = r
    return float(np.exp(lorentz.iwasawa(lorentz.opposite_nilpotent(n, v)).s))


def _radial_integral(n: int, power: float, limit: int) -> float:
    m = n - 1
    integrand = lambda r: a_alpha_opposite(n, r) ** (-power) * r ** (m - 1)
    value, error = quad(integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-10, limit=limit)
    logger.debug(f"radial integral n={n} power={power}: {value:.12g} ± {error:.2g}")
    return value


def rank_one_integral_oracle(space: SpaceData, lam: Weight, limit: Optional[int] = None) -> float:
    """c(λ) for SO(1,q) by radial quadrature over N̄."""
    if space.family != Family.SO_p_q or space.params[0] != 1:
        raise UnsupportedError("the N̄-integral oracle covers SO(1,q) only", {"space": space.label})
    if lam.rank != 1:
        raise DimensionError("rank-one weights have one coordinate", {"rank": lam.rank})
    n = space.params[1]
    m = n - 1
    alpha = space.rs.positive_roots[0]
    t = float(coroot_pairing(lam, alpha, space.rs))
    if t <= 0:
        raise DomainError("the N̄-integral diverges unless ⟨λ,α⟩/⟨α,α⟩ > 0",
                          {"lambda": str(lam), "m": m})
    limit = limit or get_settings().quadrature.oracle_limit
    return _radial_integral(n, t + m / 2, limit) / _radial_integral(n, float(m), limit)
