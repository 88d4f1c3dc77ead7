"""
SL(2,R) ⊂ SL(2,C) in the defining realization.

K = SO(2), A = {diag(e^t, e^-t)}, N = upper unipotent; the compact dual is
SU(2). The positive root α satisfies a_t^α = e^{2t}.
"""
from typing import NamedTuple
import logging

import numpy as np

from ..utils.error_handler import DomainError

logger = logging.getLogger(__name__)

CARTAN_SYMMETRY = np.array([[0.0, -1.0], [1.0, 0.0]])
POSITIVE_ROOT_VECTOR = np.array([[0.0, 1.0], [0.0, 0.0]])
COMPACT_GENERATOR = np.array([[0.0, -1.0], [1.0, 0.0]])


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def torus(t: float) -> np.ndarray:
    return np.diag([np.exp(t), np.exp(-t)])


def compact_torus(theta: float) -> np.ndarray:
    """exp(iθH), the image of the split torus in SU(2)."""
    return np.diag([np.exp(1j * theta), np.exp(-1j * theta)])


def unipotent(b: float) -> np.ndarray:
    return np.array([[1.0, b], [0.0, 1.0]])


def su2_euler(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """R_z(α) R_y(β) R_z(γ) in SU(2)."""
    rz = lambda angle: np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])
    c, s = np.cos(beta / 2), np.sin(beta / 2)
    ry = np.array([[c, -s], [s, c]])
    return rz(alpha) @ ry @ rz(gamma)


def is_real_sl2(g: np.ndarray, tol: float = 1e-10) -> bool:
    g = np.asarray(g)
    if g.shape != (2, 2):
        return False
    if np.iscomplexobj(g) and np.max(np.abs(g.imag)) > tol:
        return False
    return abs(np.linalg.det(np.real(g)) - 1.0) <= tol * max(1.0, float(np.max(np.abs(g))) ** 2)


class SL2Iwasawa(NamedTuple):
    k: np.ndarray
    a: np.ndarray
    n: np.ndarray
    t: float


def iwasawa(g: np.ndarray, tol: float = 1e-10) -> SL2Iwasawa:
    """g = k a n through a QR factorization with positive diagonal."""
    if not is_real_sl2(g, tol):
        raise DomainError("matrix is not in SL(2,R)")
    q, r = np.linalg.qr(np.real(np.asarray(g)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    q = q * signs
    r = signs[:, None] * r
    a = np.diag(np.diag(r))
    n = np.linalg.solve(a, r)
    t = float(np.log(r[0, 0]))
    return SL2Iwasawa(q, a, n, t)


def random_element(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    return rotation(rng.uniform(0, 2 * np.pi)) @ torus(scale * rng.normal()) @ unipotent(scale * rng.normal())


def random_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element from a normalized Gaussian quaternion."""
    x = rng.normal(size=4)
    x /= np.linalg.norm(x)
    return np.array([[x[0] + 1j * x[1], -x[2] + 1j * x[3]],
                     [x[2] + 1j * x[3], x[0] - 1j * x[1]]])
