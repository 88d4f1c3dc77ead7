"""
Catalog of classical symmetric-space levels.

Multiplicity table (restricted roots, e-basis realization of rank p):

    SL(n,R)          A_{n-1}   m(e_i - e_j) = 1
    SO(p,q), p < q   B_p       m(e_i ± e_j) = 1, m(e_i) = q - p
    SO(p,p)          D_p       m(e_i ± e_j) = 1
    SU(p,q), p < q   BC_p      m(e_i ± e_j) = 2, m(e_i) = 2(q - p), m(2e_i) = 1
    SU(p,p)          C_p       m(e_i ± e_j) = 2, m(2e_i) = 1
    Sp(p,q), p < q   BC_p      m(e_i ± e_j) = 4, m(e_i) = 4(q - p), m(2e_i) = 3
    Sp(p,p)          C_p       m(e_i ± e_j) = 4, m(2e_i) = 3
    SL(2,R)^r        A_1^r     m(e_i) = 1
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union
import logging

from .roots import RootSystemData, Weight, coroot_pairing, inner_product
from ..utils.error_handler import ValidationError

logger = logging.getLogger(__name__)


class Family(str, Enum):
    SL_n_R = "SL_n_R"
    SO_p_q = "SO_p_q"
    SU_p_q = "SU_p_q"
    Sp_p_q = "Sp_p_q"
    SL2_product = "SL2_product"


FAMILY_ALIASES = {
    "SL": Family.SL_n_R,
    "SL_N_R": Family.SL_n_R,
    "SO": Family.SO_p_q,
    "SO_P_Q": Family.SO_p_q,
    "SU": Family.SU_p_q,
    "SU_P_Q": Family.SU_p_q,
    "SP": Family.Sp_p_q,
    "SP_P_Q": Family.Sp_p_q,
    "SL2": Family.SL2_product,
    "SL2X": Family.SL2_product,
    "SL2_PRODUCT": Family.SL2_product,
}


def parse_family(value: Union[str, Family]) -> Family:
    if isinstance(value, Family):
        return value
    try:
        return FAMILY_ALIASES[str(value).strip().upper()]
    except KeyError:
        raise ValidationError(f"unknown family '{value}'",
                              {"known": sorted(f.value for f in Family)})


def _unit(dim: int, i: int, scale: int = 1) -> Tuple[int, ...]:
    return tuple(scale if j == i else 0 for j in range(dim))


def _combo(dim: int, i: int, j: int, sign: int) -> Tuple[int, ...]:
    out = [0] * dim
    out[i] = 1
    out[j] = sign
    return tuple(out)


def _type_a(n: int) -> Tuple[RootSystemData, List[int]]:
    roots = [_combo(n, i, j, -1) for i in range(n) for j in range(i + 1, n)]
    simple = [_combo(n, i, i + 1, -1) for i in range(n - 1)]
    rs = RootSystemData("A", n - 1, (1,) * n, tuple(roots), tuple(simple), tuple(simple))
    return rs, [1] * len(roots)


def _pairs(p: int) -> List[Tuple[int, ...]]:
    out = []
    for i in range(p):
        for j in range(i + 1, p):
            out.append(_combo(p, i, j, -1))
            out.append(_combo(p, i, j, 1))
    return out


def _classical(p: int, pair_mult: int, short_mult: int, long_mult: int) -> Tuple[RootSystemData, List[int]]:
    """Rank-p system with roots e_i ± e_j, optionally e_i (short) and 2e_i (long)."""
    roots: List[Tuple[int, ...]] = []
    mults: List[int] = []
    for r in _pairs(p):
        roots.append(r)
        mults.append(pair_mult)
    if short_mult:
        for i in range(p):
            roots.append(_unit(p, i))
            mults.append(short_mult)
    if long_mult:
        for i in range(p):
            roots.append(_unit(p, i, 2))
            mults.append(long_mult)

    chain = [_combo(p, i, i + 1, -1) for i in range(p - 1)]
    if long_mult:
        # Σ₀ is C_p; long roots 2e_i of squared length 2
        simple = chain + [_unit(p, p - 1, 2)]
        full_simple = chain + [_unit(p, p - 1)] if short_mult else simple
        gram = (Fraction(1, 2),) * p
        label = "BC" if short_mult else "C"
    elif short_mult:
        simple = chain + [_unit(p, p - 1)]
        full_simple = simple
        gram = (1,) * p if p > 1 else (2,)
        label = "B"
    else:
        simple = chain + [_combo(p, p - 2, p - 1, 1)]
        full_simple = simple
        gram = (1,) * p
        label = "D"
    rs = RootSystemData(label, p, gram, tuple(roots), tuple(simple), tuple(full_simple))
    return rs, mults


def _sl2_product(r: int) -> Tuple[RootSystemData, List[int]]:
    roots = [_unit(r, i) for i in range(r)]
    rs = RootSystemData(f"A1^{r}", r, (2,) * r, tuple(roots), tuple(roots), tuple(roots))
    return rs, [1] * r


@dataclass(frozen=True)
class SpaceData:
    """One symmetric-space level: restricted roots, multiplicities and ρ."""
    family: Family
    params: Tuple[int, ...]
    rs: RootSystemData
    multiplicities: Tuple[int, ...]
    rho: Weight

    @property
    def rank(self) -> int:
        return self.rs.rank

    @cached_property
    def _mult_map(self) -> Dict[Weight, int]:
        return dict(zip(self.rs.positive_roots, self.multiplicities))

    def mult(self, alpha: Weight) -> int:
        """m_α, zero when α is not a positive root."""
        return self._mult_map.get(alpha, 0)

    def mult_pair(self, alpha: Weight) -> Tuple[int, int]:
        """(m_α, m_{α/2})."""
        return self.mult(alpha), self.mult(alpha / 2)

    def indivisible_roots(self) -> List[Tuple[Weight, int, int]]:
        """(α, m_α, m_{2α}) for positive α with α/2 ∉ Σ."""
        out = []
        for alpha, m in zip(self.rs.positive_roots, self.multiplicities):
            if self.mult(alpha / 2):
                continue
            out.append((alpha, m, self.mult(alpha * 2)))
        return out

    @property
    def label(self) -> str:
        if self.family == Family.SL_n_R:
            return f"SL({self.params[0]},R)"
        if self.family == Family.SL2_product:
            return f"SL(2,R)^{self.params[0]}"
        name = {"SO_p_q": "SO", "SU_p_q": "SU", "Sp_p_q": "Sp"}[self.family.value]
        return f"{name}({self.params[0]},{self.params[1]})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "params": list(self.params),
            "label": self.label,
            "type": self.rs.type_label,
            "rank": self.rank,
            "positiveRoots": [[str(c) for c in a.coords] for a in self.rs.positive_roots],
            "positiveRootsE": [[str(c) for c in r] for r in self.rs.e_roots],
            "multiplicities": list(self.multiplicities),
            "rho": [str(c) for c in self.rho.coords],
        }


def _validate_params(family: Family, params: Tuple[int, ...]) -> None:
    if family in (Family.SL_n_R, Family.SL2_product):
        if len(params) != 1:
            raise ValidationError(f"{family.value} takes one parameter", {"params": list(params)})
        minimum = 2 if family == Family.SL_n_R else 1
        if params[0] < minimum:
            raise ValidationError(f"{family.value} needs a parameter >= {minimum}",
                                  {"params": list(params)})
        return
    if len(params) != 2:
        raise ValidationError(f"{family.value} takes two parameters p, q", {"params": list(params)})
    p, q = params
    if p < 1 or q < p:
        raise ValidationError("parameters must satisfy 1 <= p <= q", {"p": p, "q": q})
    if family == Family.SO_p_q and p == q == 1:
        raise ValidationError("SO(1,1) has no restricted roots", {"p": p, "q": q})


@lru_cache(maxsize=256)
def _make_space(family: Family, params: Tuple[int, ...]) -> SpaceData:
    if family == Family.SL_n_R:
        rs, mults = _type_a(params[0])
    elif family == Family.SL2_product:
        rs, mults = _sl2_product(params[0])
    else:
        p, q = params
        unit = {Family.SO_p_q: 1, Family.SU_p_q: 2, Family.Sp_p_q: 4}[family]
        long_mult = {Family.SO_p_q: 0, Family.SU_p_q: 1, Family.Sp_p_q: 3}[family]
        rs, mults = _classical(p, unit, unit * (q - p), long_mult)

    rho = Weight.zero(rs.rank)
    for alpha, m in zip(rs.positive_roots, mults):
        rho = rho + alpha * m
    rho = rho / 2
    space = SpaceData(family, params, rs, tuple(mults), rho)
    logger.debug(f"Built {space.label}: type {rs.type_label}, rank {rs.rank}")
    return space


def make_space(family: Union[str, Family], params: Iterable[int]) -> SpaceData:
    """Build a catalog level, e.g. ``make_space("SO", (1, 2))``."""
    family = parse_family(family)
    params = tuple(int(p) for p in params)
    _validate_params(family, params)
    return _make_space(family, params)


def propagates(lo: SpaceData, hi: SpaceData) -> bool:
    """Whether ``hi`` is a propagation of ``lo``."""
    if lo.family != hi.family:
        raise ValidationError("propagation compares levels of one family",
                              {"lo": lo.label, "hi": hi.label})
    if any(b < a for a, b in zip(lo.params, hi.params)):
        return False
    if lo.rank == hi.rank:
        return lo.rs.type_label == hi.rs.type_label
    if lo.family in (Family.SL_n_R, Family.SL2_product):
        return True
    # growing rank in the SO/SU/Sp series: the Dynkin type letter must persist
    return lo.rs.type_label == hi.rs.type_label


def catalog_spaces(max_rank: int = 4) -> List[SpaceData]:
    """A fixed sample of catalog levels of rank at most ``max_rank``."""
    entries: List[Tuple[Family, Tuple[int, ...]]] = []
    entries += [(Family.SL_n_R, (n,)) for n in range(2, max_rank + 2)]
    entries += [(Family.SL2_product, (r,)) for r in range(1, max_rank + 1)]
    for family in (Family.SO_p_q, Family.SU_p_q, Family.Sp_p_q):
        for p in range(1, max_rank + 1):
            for q in (p, p + 1, p + 3):
                if family == Family.SO_p_q and p == q == 1:
                    continue
                entries.append((family, (p, q)))
    return [make_space(f, params) for f, params in entries]


def rho_positivity(space: SpaceData) -> List[Fraction]:
    """⟨ρ, α⟩/⟨α, α⟩ for each positive root."""
    return [coroot_pairing(space.rho, a, space.rs) for a in space.rs.positive_roots]


def rho_norm(space: SpaceData) -> Fraction:
    return inner_product(space.rho, space.rho, space.rs)
