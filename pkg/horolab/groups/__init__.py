from .element import GroupElement
from .quadrature import HaarGroup, Quadrature, haar_quadrature, sphere_monomial_integral
from . import lorentz, sl2

__all__ = [
    "GroupElement",
    "HaarGroup",
    "Quadrature",
    "haar_quadrature",
    "sphere_monomial_integral",
    "lorentz",
    "sl2",
]
