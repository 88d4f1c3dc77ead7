from .base import ModelKind, RepModel
from .sl2_spin import SL2Spin
from .harmonic import HarmonicPoly, harmonic_dimension
from .product import ProductModel
from .registry import build_model, model_kind_for, predicted_dimension
from .functions import Component, RegularFunction, Side, top_component_product
from .embeddings import embed, embed_element, gamma_factor, inclusion_indices, project, project_exact

__all__ = [
    "ModelKind",
    "RepModel",
    "SL2Spin",
    "HarmonicPoly",
    "harmonic_dimension",
    "ProductModel",
    "build_model",
    "model_kind_for",
    "predicted_dimension",
    "Component",
    "RegularFunction",
    "Side",
    "top_component_product",
    "embed",
    "embed_element",
    "gamma_factor",
    "inclusion_indices",
    "project",
    "project_exact",
]
