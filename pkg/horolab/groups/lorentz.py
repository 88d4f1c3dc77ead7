"""
Explicit formulas for G₀ = SO₀(n,1) in real coordinates.

Coordinates are indexed 0..n with the time axis at index 1, so the invariant
form is B = diag(1, -1, 1, ..., 1). The Cartan subspace 𝔞₀ is spanned by the
boost H = E₀₁ + E₁₀, K₀ = SO(n) acts on the indices {0, 2, ..., n} and fixes
the base point x₀ = e₁ of the hyperboloid, and N₀ fixes the null vector
q = e₀ + e₁. With these choices a_t = exp(tH) has a_t^α = e^t.

The holomorphic extension to SO(n+1, C) is the conjugation g ↦ D g D⁻¹ with
D = diag(1, i, 1, ..., 1); it is the identity on K₀.
"""
from typing import NamedTuple, Sequence
import logging

import numpy as np
from scipy.stats import special_ortho_group

from ..utils.error_handler import DimensionError, DomainError

logger = logging.getLogger(__name__)

TIME = 1


def minkowski_form(n: int) -> np.ndarray:
    form = np.eye(n + 1)
    form[TIME, TIME] = -1.0
    return form


def null_vector(n: int) -> np.ndarray:
    q = np.zeros(n + 1)
    q[0] = q[TIME] = 1.0
    return q


def spatial_indices(n: int) -> list:
    """Indices of the K₀-plane {0, 2, ..., n}."""
    return [0] + list(range(2, n + 1))


def boost(n: int, t: float) -> np.ndarray:
    g = np.eye(n + 1)
    g[0, 0] = g[TIME, TIME] = np.cosh(t)
    g[0, TIME] = g[TIME, 0] = np.sinh(t)
    return g


def nilpotent_generator(n: int, v: Sequence[float]) -> np.ndarray:
    """X_v = v qᵀB − q vᵀB, an element of the root space 𝔤_α."""
    v = np.asarray(v, dtype=float)
    if v.shape != (n - 1,):
        raise DimensionError("N₀ is parametrized by vectors of length n-1",
                             {"n": n, "length": int(v.size)})
    full = np.zeros(n + 1)
    full[2:] = v
    form = minkowski_form(n)
    q = null_vector(n)
    return np.outer(full, q @ form) - np.outer(q, full @ form)


def nilpotent(n: int, v: Sequence[float]) -> np.ndarray:
    """n_v = exp(X_v) = I + X_v + X_v²/2."""
    x = nilpotent_generator(n, v)
    return np.eye(n + 1) + x + 0.5 * (x @ x)


def cartan_involution(g: np.ndarray) -> np.ndarray:
    form = minkowski_form(g.shape[0] - 1)
    return form @ g @ form


def opposite_nilpotent(n: int, v: Sequence[float]) -> np.ndarray:
    return cartan_involution(nilpotent(n, v))


def spatial_rotation(n: int, rotation: np.ndarray) -> np.ndarray:
    """Embed R ∈ SO(n) as an element of K₀."""
    rotation = np.asarray(rotation)
    if rotation.shape != (n, n):
        raise DimensionError("K₀ rotations are n×n", {"n": n, "shape": list(rotation.shape)})
    g = np.eye(n + 1)
    idx = spatial_indices(n)
    g[np.ix_(idx, idx)] = rotation
    return g


def weyl_representative(n: int) -> np.ndarray:
    """s₀ ∈ K₀ reversing the 𝔞-axis; rotation by π in the (0, 2)-plane."""
    if n < 2:
        raise DomainError("SO(1,1) has no Weyl representative in K₀", {"n": n})
    g = np.eye(n + 1)
    g[0, 0] = g[2, 2] = -1.0
    return g


def is_lorentz(g: np.ndarray, tol: float = 1e-10) -> bool:
    """Membership in SO₀(n,1)."""
    g = np.asarray(g)
    if np.iscomplexobj(g):
        if np.max(np.abs(g.imag), initial=0.0) > tol:
            return False
        g = g.real
    form = minkowski_form(g.shape[0] - 1)
    scale = max(1.0, float(np.max(np.abs(g))) ** 2)
    return (np.allclose(g.T @ form @ g, form, atol=tol * scale)
            and g[TIME, TIME] > 0
            and np.linalg.det(g) > 0)


def a_character(g: np.ndarray) -> float:
    """a(g)^α for the KAN decomposition g = k a n, read off as (g q)_time."""
    g = np.real_if_close(np.asarray(g))
    return float((g @ null_vector(g.shape[0] - 1))[TIME])


class LorentzIwasawa(NamedTuple):
    k: np.ndarray
    a: np.ndarray
    n: np.ndarray
    s: float
    v: np.ndarray


def iwasawa(g: np.ndarray, tol: float = 1e-9) -> LorentzIwasawa:
    """g = k a_s n_v with k ∈ K₀, a_s = exp(sH), n_v ∈ N₀."""
    g = np.asarray(g)
    if not is_lorentz(g, tol):
        raise DomainError("matrix is not in SO₀(n,1)", {"shape": list(g.shape)})
    g = np.real(g)
    n = g.shape[0] - 1
    form = minkowski_form(n)
    y = form @ g.T @ form[:, TIME]
    # y = g⁻¹x₀ = n_{-v} a_{-s} x₀
    s = float(np.log(-(null_vector(n) @ form @ y)))
    v = np.exp(-s) * y[2:]
    a = boost(n, s)
    nil = nilpotent(n, v)
    k = g @ nilpotent(n, -v) @ boost(n, -s)
    logger.debug(f"Lorentz Iwasawa: s={s:.6g}, |v|={np.linalg.norm(v):.6g}")
    return LorentzIwasawa(k, a, nil, s, v)


def complexifier(n: int) -> np.ndarray:
    d = np.ones(n + 1, dtype=complex)
    d[TIME] = 1j
    return np.diag(d)


def to_complex(g: np.ndarray) -> np.ndarray:
    """Image of a real Lorentz matrix in SO(n+1, C)."""
    d = complexifier(g.shape[0] - 1)
    return d @ g @ np.linalg.inv(d)


def from_complex(g: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Inverse of ``to_complex``; fails off the real form."""
    d = complexifier(g.shape[0] - 1)
    real = np.linalg.inv(d) @ np.asarray(g, dtype=complex) @ d
    if np.max(np.abs(real.imag), initial=0.0) > tol * max(1.0, float(np.max(np.abs(real)))):
        raise DomainError("element is not in the real form SO₀(n,1)")
    return real.real


def random_element(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """k a_t n_v with random factors."""
    k = spatial_rotation(n, random_rotation(n, rng))
    a = boost(n, scale * rng.normal())
    nil = nilpotent(n, scale * rng.normal(size=n - 1))
    return k @ a @ nil


def random_rotation(n: int, rng: np.random.Generator) -> np.ndarray:
    if n == 1:
        return np.eye(1)
    return special_ortho_group.rvs(n, random_state=rng)
