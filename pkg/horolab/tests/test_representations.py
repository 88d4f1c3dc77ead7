from fractions import Fraction

import numpy as np
import pytest
from scipy.special import eval_gegenbauer

from horolab.algebra import Weight, make_space, weight_from_omega
from horolab.analysis import c_mu
from horolab.config import PerformanceSettings, Settings
from horolab.representations import (
    HarmonicPoly,
    ModelKind,
    ProductModel,
    RegularFunction,
    SL2Spin,
    Side,
    build_model,
    embed,
    embed_element,
    gamma_factor,
    harmonic_dimension,
    inclusion_indices,
    model_kind_for,
    predicted_dimension,
    project,
    top_component_product,
)
from horolab.representations import registry
from horolab.utils.error_handler import DimensionError, DomainError, ResourceError, UnsupportedError, ValidationError

MODEL_CASES = [
    ("SL", (2,), [0]),
    ("SL", (2,), [2]),
    ("SO", (1, 2), [1]),
    ("SO", (1, 3), [2]),
    ("SO", (1, 4), [1]),
    ("SL2", (2,), [1, 2]),
]


def _model(family, params, coefficients):
    space = make_space(family, params)
    return build_model(space, weight_from_omega(coefficients, space.rs))


@pytest.fixture(params=MODEL_CASES, ids=lambda case: f"{case[0]}{case[1]}-{case[2]}")
def model(request):
    """One explicit model per kind and a few weights."""
    return _model(*request.param)


def test_registry_picks_model_kinds():
    assert model_kind_for(make_space("SL", (2,))) == ModelKind.SL2Spin.value
    assert model_kind_for(make_space("SO", (1, 5))) == ModelKind.HarmonicPoly.value
    assert model_kind_for(make_space("SL2", (3,))) == ModelKind.ProductModel.value
    with pytest.raises(UnsupportedError):
        model_kind_for(make_space("SL", (3,)))
    assert isinstance(_model("SL", (2,), [1]), SL2Spin)
    assert isinstance(_model("SO", (1, 3), [1]), HarmonicPoly)
    assert isinstance(_model("SL2", (2,), [1, 0]), ProductModel)


def test_predicted_dimension():
    so3 = make_space("SO", (1, 3))
    assert predicted_dimension(so3, weight_from_omega([2], so3.rs)) == 9
    pair = make_space("SL2", (2,))
    assert predicted_dimension(pair, weight_from_omega([1, 2], pair.rs)) == 15
    assert [harmonic_dimension(2, k) for k in range(4)] == [1, 3, 5, 7]
    assert [harmonic_dimension(3, k) for k in range(4)] == [1, 4, 9, 16]


def test_build_model_rejects_bad_weights():
    so3 = make_space("SO", (1, 3))
    assert build_model(so3, so3.rho).dimension == 4
    with pytest.raises(DomainError):
        build_model(so3, Weight((Fraction(1, 2),)))
    with pytest.raises(DomainError):
        SL2Spin.from_degree(make_space("SL", (2,)), 3)


def test_dimension_cap(monkeypatch):
    capped = Settings(performance=PerformanceSettings(max_model_dimension=3))
    monkeypatch.setattr(registry, "get_settings", lambda: capped)
    sl2 = make_space("SL", (2,))
    with pytest.raises(ResourceError):
        build_model(sl2, weight_from_omega([7], sl2.rs))


def test_dimension_matches_weyl_formula(model):
    assert model.dimension == model.weyl_dimension()
    assert model.dimension == predicted_dimension(model.space, model.mu)


def test_representation_is_a_homomorphism(model, rng):
    g, h = model.random_real(rng, 0.6), model.random_real(rng, 0.6)
    left = model.rep_matrix(g @ h)
    right = model.rep_matrix(g) @ model.rep_matrix(h)
    assert np.allclose(left, right, atol=1e-9 * max(1.0, np.max(np.abs(left))))
    assert np.allclose(model.rep_matrix(model.identity()), np.eye(model.dimension))


def test_k_fixed_vector(model, rng):
    e = model.k_fixed_vector
    k = model.random_k(rng)
    assert np.allclose(model.rep_matrix(k) @ e, e, atol=1e-9)
    assert np.allclose(model.k_projection @ e, e, atol=1e-9)


def test_distinguished_vectors(model):
    u = model.highest_vector
    assert u @ model.e_star == pytest.approx(1.0)
    assert (model.rep_matrix(model.s0) @ u) @ model.u_star == pytest.approx(1.0)
    assert model.e_tilde @ model.u_star == pytest.approx(1.0)
    assert model.lowest_vector @ model.e_star == pytest.approx(1.0)
    assert model.lowest_vector @ model.v_plus == pytest.approx(1.0)
    assert u @ model.v_minus == pytest.approx(1.0)
    assert model.hermitian(model.e_unit, model.e_unit).real == pytest.approx(1.0)


def test_c_mu_agrees_across_definitions(model):
    oracle = model.c_mu_oracle()
    assert model.c_mu_cosine() == pytest.approx(oracle, rel=1e-9)
    assert oracle == pytest.approx(c_mu(model.space, model.mu), rel=1e-9)
    assert complex(model.e_tilde @ model.e_star) * oracle == pytest.approx(1.0, rel=1e-9)


def test_zonal_function(model, rng):
    assert model.zonal(model.identity()) == pytest.approx(1.0)
    k = model.random_k(rng)
    g = model.random_real(rng, 0.5)
    assert model.zonal(k @ g @ k.inverse()) == pytest.approx(model.zonal(g), rel=1e-8)


@pytest.mark.parametrize("n,k", [(2, 2), (3, 1), (4, 3)])
def test_harmonic_zonal_is_gegenbauer(n: int, k: int):
    model = _model("SO", (1, n), [k])
    alpha = (n - 1) / 2
    for t in (0.2, 0.9):
        expected = eval_gegenbauer(k, alpha, np.cosh(t)) / eval_gegenbauer(k, alpha, 1.0)
        assert model.zonal(model.a_element(t)).real == pytest.approx(expected, rel=1e-9)


def test_highest_coefficient_on_torus(model, rng):
    t = rng.uniform(0.1, 0.8, size=model.space.rank)
    a = model.a_element(t)
    assert abs(model.f_highest(a)) > 0
    assert model.a_power(t) == pytest.approx(float(np.exp(np.dot(model.mu_coefficients, model.omega_exponents(t)))))


def test_element_of_wrong_group():
    sl2 = _model("SL", (2,), [1])
    harmonic = _model("SO", (1, 2), [1])
    with pytest.raises(DomainError):
        sl2.rep_matrix(harmonic.identity())
    with pytest.raises(DimensionError):
        sl2.coeff_f(np.ones(5), sl2.identity())


def test_product_model_factors(rng):
    model = _model("SL2", (2,), [1, 2])
    assert model.factor_degrees == (2, 4)
    g = model.random_real(rng, 0.5)
    pieces = model.factor_elements(g)
    expected = np.prod([f.f_highest(x) for f, x in zip(model.factors, pieces)])
    assert model.coeff_f(model.highest_vector, g) == pytest.approx(expected, rel=1e-9)
    with pytest.raises(UnsupportedError):
        model.compact_quadrature(4)
    with pytest.raises(ValidationError):
        model.a_element([0.1, 0.2, 0.3])


def test_harmonic_embedding_and_projection(rng):
    lo, hi = _model("SO", (1, 2), [2]), _model("SO", (1, 3), [2])
    v = rng.standard_normal(lo.dimension) + 1j * rng.standard_normal(lo.dimension)
    assert np.allclose(project(hi, lo, embed(lo, hi, v)), v)
    index = inclusion_indices(lo, hi)
    assert len(set(index.tolist())) == lo.dimension
    gamma = float(gamma_factor(lo, hi))
    w = rng.standard_normal(lo.dimension)
    left = hi.bilinear(embed(lo, hi, v), embed(lo, hi, w))
    assert left == pytest.approx(gamma * lo.bilinear(v, w), rel=1e-10)


def test_embedded_elements_act_compatibly(rng):
    lo, hi = _model("SO", (1, 2), [1]), _model("SO", (1, 3), [1])
    v = rng.standard_normal(lo.dimension) + 0j
    g = lo.random_real(rng, 0.5)
    big = embed_element(lo, hi, g)
    assert np.allclose(hi.rep_matrix(big) @ embed(lo, hi, v), embed(lo, hi, lo.rep_matrix(g) @ v), atol=1e-9)
    with pytest.raises(DomainError):
        embed(lo, _model("SO", (1, 3), [2]), v)


def test_regular_function_algebra(rng):
    model = _model("SL", (2,), [1])
    v = rng.standard_normal(3) + 0j
    f = RegularFunction.single(model, v)
    g = model.random_real(rng, 0.5)
    assert (f + f)(g) == pytest.approx(2 * f(g))
    assert (3 * f)(g) == pytest.approx(3 * f(g))
    assert f.translate(g)(g) == pytest.approx(f(model.identity()))
    assert f.distance(f) == 0.0
    with pytest.raises(ValidationError):
        f + f.with_side(Side.XI)


def test_xi_products_multiply_pointwise(rng):
    left, right = _model("SL", (2,), [1]), _model("SL", (2,), [2])
    f = RegularFunction.random([left], rng, Side.XI)
    h = RegularFunction.random([right], rng, Side.XI)
    product = top_component_product(f, h)
    assert product.weights == [(3,)]
    for _ in range(3):
        g = left.random_real(rng, 0.5)
        assert product(g) == pytest.approx(f(g) * h(g), rel=1e-9)
