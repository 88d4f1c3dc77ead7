"""
Regular functions on Z = G/K and Ξ = G/MN as finite sums of μ-components.

A Z-side component (π_μ, v) stands for f_{v,μ}(g·x₀) = ⟨v, π*(g)e*_μ⟩ and a
Ξ-side component for ψ_{v,μ}(g·ξ₀) = ⟨v, π*(g)u*_μ⟩. Both sides share the
coefficient vectors, so the normalized Radon transform only flips the tag.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple
import logging

import numpy as np
from scipy.signal import convolve

from .base import ModelKind, RepModel
from .registry import build_model
from ..groups.element import GroupElement
from ..utils.error_handler import DimensionError, UnsupportedError, ValidationError

logger = logging.getLogger(__name__)

MuKey = Tuple[int, ...]


class Side(str, Enum):
    Z = "Z"
    XI = "Xi"


@dataclass(frozen=True, eq=False)
class Component:
    model: RepModel
    vector: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vector", self.model._check_vector(self.vector))

    @property
    def key(self) -> MuKey:
        return self.model.mu_coefficients

    def evaluate(self, side: Side, g: GroupElement) -> complex:
        if side == Side.Z:
            return self.model.coeff_f(self.vector, g)
        return self.model.coeff_psi(self.vector, g)


class RegularFunction:
    """Σ_μ f_{v_μ,μ} (Z side) or Σ_μ ψ_{v_μ,μ} (Ξ side) at one level."""

    def __init__(self, components: Iterable[Component], side: Side = Side.Z):
        self.side = Side(side)
        self.components: Dict[MuKey, Component] = {}
        group = None
        for component in components:
            if group is not None and component.model.group_tag != group:
                raise ValidationError("components act through different groups",
                                      {"groups": [group, component.model.group_tag]})
            group = component.model.group_tag
            if component.key in self.components:
                previous = self.components[component.key]
                component = Component(component.model, previous.vector + component.vector)
            self.components[component.key] = component

    @classmethod
    def single(cls, model: RepModel, vector: np.ndarray, side: Side = Side.Z) -> "RegularFunction":
        return cls([Component(model, vector)], side)

    @classmethod
    def highest(cls, model: RepModel, side: Side = Side.Z) -> "RegularFunction":
        """f_μ (Z side) or ψ_μ (Ξ side)."""
        return cls.single(model, model.highest_vector, side)

    @classmethod
    def random(cls, models: Iterable[RepModel], rng: np.random.Generator,
               side: Side = Side.Z) -> "RegularFunction":
        components = []
        for model in models:
            v = rng.standard_normal(model.dimension) + 1j * rng.standard_normal(model.dimension)
            components.append(Component(model, v))
        return cls(components, side)

    @property
    def weights(self) -> List[MuKey]:
        return sorted(self.components)

    @property
    def models(self) -> List[RepModel]:
        return [self.components[k].model for k in self.weights]

    def __len__(self) -> int:
        return len(self.components)

    def __call__(self, g: GroupElement) -> complex:
        return self.evaluate(g)

    def evaluate(self, g: GroupElement) -> complex:
        return complex(sum(c.evaluate(self.side, g) for c in self.components.values()))

    def component(self, key: MuKey) -> Optional[Component]:
        return self.components.get(tuple(key))

    def with_side(self, side: Side) -> "RegularFunction":
        return RegularFunction(self.components.values(), side)

    def translate(self, g: GroupElement) -> "RegularFunction":
        """(g·F)(x) = F(g⁻¹x), i.e. v ↦ π(g)v in every component."""
        return RegularFunction(
            [Component(c.model, c.model.rep_matrix(g) @ c.vector) for c in self.components.values()],
            self.side,
        )

    def scaled(self, factor: complex) -> "RegularFunction":
        return RegularFunction([Component(c.model, factor * c.vector) for c in self.components.values()],
                               self.side)

    def __add__(self, other: "RegularFunction") -> "RegularFunction":
        if other.side != self.side:
            raise ValidationError("cannot add functions on different sides",
                                  {"left": self.side.value, "right": other.side.value})
        return RegularFunction(list(self.components.values()) + list(other.components.values()), self.side)

    def __mul__(self, factor: complex) -> "RegularFunction":
        return self.scaled(factor)

    __rmul__ = __mul__

    def distance(self, other: "RegularFunction") -> float:
        """Max coefficient difference over the union of components."""
        keys = set(self.components) | set(other.components)
        worst = 0.0
        for key in keys:
            a, b = self.components.get(key), other.components.get(key)
            if a is None or b is None:
                present = a or b
                worst = max(worst, float(np.max(np.abs(present.vector))))
                continue
            if a.vector.shape != b.vector.shape:
                raise DimensionError("components of different dimension", {"weight": list(key)})
            worst = max(worst, float(np.max(np.abs(a.vector - b.vector))))
        return worst

    def to_dict(self) -> Dict[str, Any]:
        return {
            "side": self.side.value,
            "components": [
                {"mu": list(k), "dimension": self.components[k].model.dimension}
                for k in self.weights
            ],
        }


def _tensor_shape(model: RepModel) -> Tuple[int, ...]:
    if model.kind == ModelKind.SL2Spin:
        return (model.dimension,)
    if model.kind == ModelKind.ProductModel:
        return tuple(f.dimension for f in model.factors)
    raise UnsupportedError("top components are implemented for binary-form models",
                           {"model": model.kind.value})


def multiply_top(left: Component, right: Component) -> Component:
    """The V_{μ+ν} image of v ⊗ w under multiplication of binary forms."""
    shape_l, shape_r = _tensor_shape(left.model), _tensor_shape(right.model)
    product_vector = convolve(left.vector.reshape(shape_l), right.vector.reshape(shape_r), method="direct")
    model = build_model(left.model.space, left.model.mu + right.model.mu)
    return Component(model, product_vector.reshape(-1))


def top_component_product(f: RegularFunction, h: RegularFunction) -> RegularFunction:
    """Top graded part of f·h.

    For single components the product f_{v,μ}·f_{w,ν} has top component
    f_{v·w,μ+ν}, and ψ_{v,μ}·ψ_{w,ν} = ψ_{v·w,μ+ν} holds exactly.
    """
    if f.side != h.side:
        raise ValidationError("factors live on different sides",
                              {"left": f.side.value, "right": h.side.value})
    if not f.components or not h.components:
        return RegularFunction([], f.side)
    top_l = max(f.components, key=sum)
    top_r = max(h.components, key=sum)
    degree = sum(top_l) + sum(top_r)
    pieces = [multiply_top(a, b)
              for a in f.components.values() for b in h.components.values()
              if sum(a.key) + sum(b.key) == degree]
    return RegularFunction(pieces, f.side)
