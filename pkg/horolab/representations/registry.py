"""
Model construction for a level and a spherical highest weight.
"""
from functools import lru_cache
import logging

import numpy as np

from .base import RepModel
from .harmonic import HarmonicPoly, harmonic_dimension
from .product import ProductModel
from .sl2_spin import SL2Spin
from ..algebra.catalog import Family, SpaceData
from ..algebra.roots import Weight, check_mu, omega_coefficients
from ..config import get_settings
from ..utils.error_handler import ResourceError, UnsupportedError

logger = logging.getLogger(__name__)


def model_kind_for(space: SpaceData) -> str:
    """Name of the model class realizing ``space``; raises for levels without one."""
    if space.family == Family.SL_n_R and space.params[0] == 2:
        return SL2Spin.kind.value
    if space.family == Family.SL2_product:
        return ProductModel.kind.value
    if space.family == Family.SO_p_q and space.params[0] == 1:
        return HarmonicPoly.kind.value
    raise UnsupportedError(f"no explicit model for {space.label}",
                           {"space": space.label, "supported": ["SL(2,R)", "SL(2,R)^r", "SO(1,n)"]})


def predicted_dimension(space: SpaceData, mu: Weight) -> int:
    """d(μ) from closed formulas, without building anything."""
    coefficients = [int(k) for k in omega_coefficients(mu, space.rs)]
    kind = model_kind_for(space)
    if kind == SL2Spin.kind.value:
        return 2 * coefficients[0] + 1
    if kind == ProductModel.kind.value:
        return int(np.prod([2 * k + 1 for k in coefficients]))
    return harmonic_dimension(space.params[1], coefficients[0])


@lru_cache(maxsize=128)
def build_model(space: SpaceData, mu: Weight) -> RepModel:
    """The explicit model of π_μ for ``space``.

    Raises:
        DomainError: μ is not in Λ⁺
        UnsupportedError: the level has no explicit model
        ResourceError: d(μ) exceeds ``performance.max_model_dimension``
    """
    check_mu(mu, space.rs)
    kind = model_kind_for(space)
    dimension = predicted_dimension(space, mu)
    cap = get_settings().performance.max_model_dimension
    # product models check the cap themselves when tensor data is formed
    if dimension > cap and kind != ProductModel.kind.value:
        raise ResourceError(f"d(μ) = {dimension} exceeds the model dimension cap",
                            {"space": space.label, "mu": str(mu), "cap": cap})
    logger.debug(f"Building {kind} for {space.label}, μ={mu}, d={dimension}")
    if kind == SL2Spin.kind.value:
        return SL2Spin(space, mu)
    if kind == ProductModel.kind.value:
        return ProductModel(space, mu)
    return HarmonicPoly(space, mu)
