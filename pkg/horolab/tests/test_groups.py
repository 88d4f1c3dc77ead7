from fractions import Fraction

import numpy as np
import pytest

from horolab.groups import GroupElement, HaarGroup, haar_quadrature, lorentz, sl2, sphere_monomial_integral
from horolab.groups.quadrature import circle_rule, so3_rule, su2_rule
from horolab.utils.error_handler import DimensionError, DomainError, UnsupportedError, ValidationError


def test_group_element_product_and_inverse(rng):
    g = GroupElement(sl2.random_element(rng), "SL(2,C)")
    h = GroupElement(sl2.random_element(rng), "SL(2,C)")
    product = g @ h
    assert np.allclose(product.matrix, g.matrix @ h.matrix)
    assert (g @ g.inverse()).distance(GroupElement.identity(2, "SL(2,C)")) < 1e-10
    assert g.is_real()


def test_group_element_validation():
    with pytest.raises(DimensionError):
        GroupElement(np.ones((2, 3)), "SL(2,C)")
    with pytest.raises(DomainError):
        GroupElement(np.eye(2), "SL(2,C)") @ GroupElement(np.eye(2), "SO(3,C)")


def test_sl2_iwasawa(rng):
    for _ in range(10):
        g = sl2.random_element(rng, 1.3)
        parts = sl2.iwasawa(g)
        assert np.allclose(parts.k @ parts.a @ parts.n, g)
        assert np.allclose(parts.k.T @ parts.k, np.eye(2))
        assert np.isclose(parts.n[1, 0], 0.0) and np.isclose(parts.n[0, 0], 1.0)
        assert parts.t == pytest.approx(np.log(parts.a[0, 0]))


def test_sl2_iwasawa_of_torus():
    assert sl2.iwasawa(sl2.torus(0.7)).t == pytest.approx(0.7)
    with pytest.raises(DomainError):
        sl2.iwasawa(2 * np.eye(2))


def test_random_su2_is_unitary(rng):
    u = sl2.random_su2(rng)
    assert np.allclose(u.conj().T @ u, np.eye(2))
    assert np.linalg.det(u) == pytest.approx(1.0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lorentz_iwasawa(rng, n: int):
    g = lorentz.random_element(n, rng, 0.8)
    assert lorentz.is_lorentz(g)
    parts = lorentz.iwasawa(g)
    assert np.allclose(parts.k @ parts.a @ parts.n, g)
    assert lorentz.is_lorentz(parts.k)
    unit = np.zeros(n + 1)
    unit[lorentz.TIME] = 1.0
    assert np.allclose(parts.k[:, lorentz.TIME], unit, atol=1e-9)


def test_lorentz_boost_roundtrip():
    parts = lorentz.iwasawa(lorentz.boost(3, 0.4))
    assert parts.s == pytest.approx(0.4)
    assert np.allclose(parts.v, 0.0)
    assert np.allclose(parts.k, np.eye(4))


def test_lorentz_complex_form(rng):
    g = lorentz.random_element(3, rng)
    z = lorentz.to_complex(g)
    assert np.allclose(z.T @ z, np.eye(4))
    assert np.allclose(lorentz.from_complex(z), g)
    with pytest.raises(DomainError):
        lorentz.iwasawa(2 * np.eye(4))


def test_nilpotent_dimension():
    with pytest.raises(DimensionError):
        lorentz.nilpotent(3, [1.0])


def test_circle_rule():
    rule = circle_rule(3)
    assert rule.weights.sum() == pytest.approx(1.0)
    assert rule.integrate(lambda m: m[0, 0] ** 2) == pytest.approx(0.5)
    assert rule.integrate(lambda m: m[0, 0]) == pytest.approx(0.0, abs=1e-12)


def test_su2_rule_moments():
    rule = su2_rule(4)
    assert rule.weights.sum() == pytest.approx(1.0)
    assert rule.integrate(lambda m: abs(m[0, 0]) ** 2) == pytest.approx(0.5)
    assert rule.integrate(lambda m: abs(m[0, 0]) ** 4) == pytest.approx(1.0 / 3.0)
    assert abs(rule.integrate(lambda m: m[0, 0] * m[1, 1])) == pytest.approx(0.5)
    tagged = rule.elements("SL(2,C)")
    assert tagged[0][0].group == "SL(2,C)"


def test_so3_rule_moments():
    rule = so3_rule(4)
    assert rule.integrate(lambda m: m[0, 0] ** 2) == pytest.approx(1.0 / 3.0)
    assert rule.integrate(lambda m: m[2, 2]) == pytest.approx(0.0, abs=1e-12)


def test_haar_quadrature_dispatch():
    assert len(haar_quadrature(HaarGroup.SO2, 5)) == 5
    assert haar_quadrature("SO_n_plus_1", 2, n=2).group == "SO(3)"
    with pytest.raises(UnsupportedError):
        haar_quadrature(HaarGroup.SO_n_plus_1, 2, n=3)
    with pytest.raises(ValidationError):
        haar_quadrature(HaarGroup.SU2, 0)
    with pytest.raises(ValidationError):
        haar_quadrature(HaarGroup.SO_n, 2)


def test_sphere_monomial_integral():
    assert sphere_monomial_integral([2, 0, 0]) == Fraction(1, 3)
    assert sphere_monomial_integral([2, 2, 0], n=2) == Fraction(1, 15)
    assert sphere_monomial_integral([4, 0]) == Fraction(3, 8)
    assert sphere_monomial_integral([1, 1]) == 0
    assert sphere_monomial_integral([0, 0, 0]) == 1
    with pytest.raises(DimensionError):
        sphere_monomial_integral([2, 0], n=2)
