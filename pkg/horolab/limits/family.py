"""
Propagated families: a chain of levels, a stabilized weight and the models,
embeddings and projections between the levels.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence
import logging

import numpy as np

from ..algebra.catalog import Family, SpaceData, parse_family
from ..algebra.propagation import WeightSequence, chain_from_levels, classify_limit
from ..groups.element import GroupElement
from ..representations.base import RepModel
from ..representations.embeddings import embed, embed_element, project
from ..representations.registry import build_model, model_kind_for
from ..utils.error_handler import DomainError, UnsupportedError, ValidationError
from .admissibility import check_admissible

logger = logging.getLogger(__name__)


@dataclass
class PropagatedFamily:
    chain: List[SpaceData]
    coefficients: tuple
    levels: List[int] = field(default_factory=list)
    admissible: Optional[bool] = None

    def __post_init__(self):
        if not self.chain:
            raise ValidationError("a family needs at least one level")
        for space in self.chain:
            model_kind_for(space)
        self.weights = WeightSequence(self.chain, tuple(self.coefficients))
        if not self.levels:
            self.levels = [s.params[-1] for s in self.chain]
        if self.admissible is None:
            self.admissible = bool(self.admissibility["admissible"])

    def __len__(self) -> int:
        return len(self.chain)

    @cached_property
    def admissibility(self) -> Dict[str, Any]:
        return check_admissible(self.chain)

    @cached_property
    def classification(self) -> Dict[str, Any]:
        return classify_limit(self.chain)

    @property
    def finite_rank(self) -> bool:
        return self.classification["finiteRank"]

    def require_finite_rank(self, operation: str) -> None:
        if not self.finite_rank:
            raise UnsupportedError(f"{operation} needs a finite-rank family",
                                   {"ranks": self.classification["ranks"]})

    def require_admissible(self, operation: str) -> None:
        if not self.admissible:
            raise DomainError(f"{operation} needs an admissible family",
                              {"levels": [s.label for s in self.chain]})

    def model(self, j: int) -> RepModel:
        return build_model(self.chain[j], self.weights.at(j))

    @property
    def models(self) -> List[RepModel]:
        return [self.model(j) for j in range(len(self))]

    def _check_order(self, j: int, k: int) -> None:
        if not 0 <= j <= k < len(self):
            raise ValidationError("levels must satisfy 0 <= j <= k < len(family)",
                                  {"j": j, "k": k, "levels": len(self)})

    def embed(self, j: int, k: int, v: np.ndarray) -> np.ndarray:
        """ι_{k,j} as the composite of consecutive embeddings."""
        self._check_order(j, k)
        for step in range(j, k):
            v = embed(self.model(step), self.model(step + 1), v)
        return v

    def project(self, k: int, j: int, w: np.ndarray) -> np.ndarray:
        """proj_{j,k} as the composite of consecutive projections."""
        self._check_order(j, k)
        for step in range(k, j, -1):
            w = project(self.model(step), self.model(step - 1), w)
        return w

    def embed_element(self, j: int, k: int, g: GroupElement) -> GroupElement:
        self._check_order(j, k)
        return embed_element(self.model(j), self.model(k), g)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "levels": [s.label for s in self.chain],
            "muCoefficients": list(self.coefficients),
            "finiteRank": self.finite_rank,
            "admissible": self.admissible,
            "familyTag": self.classification["familyTag"],
        }


def harmonic_family(levels: Sequence[int], k: int) -> PropagatedFamily:
    """H^n for n in ``levels`` with μ = kω."""
    return PropagatedFamily(chain_from_levels(Family.SO_p_q, 1, levels), (k,), list(levels))


def sl2_product_family(ranks: Sequence[int], coefficients: Sequence[int]) -> PropagatedFamily:
    """SL(2,R)^r for r in ``ranks``; μ has the given coefficients on the first factors."""
    return PropagatedFamily(chain_from_levels(Family.SL2_product, None, ranks), tuple(coefficients), list(ranks))


def build_family(family, p: Optional[int], levels: Sequence[int],
                 coefficients: Sequence[int]) -> PropagatedFamily:
    family = parse_family(family)
    if family == Family.SL2_product:
        return sl2_product_family(levels, coefficients)
    if family == Family.SO_p_q and p == 1:
        if len(coefficients) != 1:
            raise ValidationError("rank-one chains take a single ω-coefficient",
                                  {"coefficients": list(coefficients)})
        return harmonic_family(levels, coefficients[0])
    raise UnsupportedError(f"no explicit models along {family.value} chains with p={p}",
                           {"family": family.value, "p": p})
