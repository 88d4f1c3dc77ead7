import numpy as np
import pytest

from horolab.algebra import make_space, weight_from_omega
from horolab.representations import RegularFunction, Side, build_model
from horolab.transforms import (
    DualCoefficients,
    EmbeddingKind,
    GroupSphere,
    KernelMethod,
    Method,
    c_mu_oracle,
    decreases_to_plateau,
    dual_radon,
    embedding_coeffs,
    gamma,
    gamma_inv,
    in_domain_O,
    kernel_kZ,
    kernel_operator_KXi,
    kernel_operator_KZ,
    kernel_tilde,
    sphere_pairing,
    sphere_radon,
    sphere_radon_dual,
    sphere_to_horosphere_limit,
    spherical_models,
)
from horolab.utils.error_handler import TruncationError, UnsupportedError, ValidationError


def _model(family, params, coefficients):
    space = make_space(family, params)
    return build_model(space, weight_from_omega(coefficients, space.rs))


def _vector(rng, dimension):
    return rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)


@pytest.fixture(params=[("SL", (2,), [1]), ("SL", (2,), [2]), ("SO", (1, 2), [2])],
                ids=["sl2-1", "sl2-2", "h2-2"])
def model(request):
    """Models with a Haar rule on their compact dual."""
    return _model(*request.param)


def test_gamma_switches_sides(model, rng):
    f = RegularFunction.single(model, _vector(rng, model.dimension))
    g = model.random_real(rng, 0.5)
    psi = gamma(f)
    assert psi.side == Side.XI
    assert psi(g) == pytest.approx(model.coeff_psi(f.components[model.mu_coefficients].vector, g))
    assert gamma_inv(psi)(g) == pytest.approx(f(g))
    with pytest.raises(ValidationError):
        gamma(psi)
    with pytest.raises(ValidationError):
        gamma_inv(f)


def test_dual_radon_identity(model, rng):
    v = _vector(rng, model.dimension)
    psi = RegularFunction.single(model, v, Side.XI)
    x = model.random_real(rng, 0.7)
    exact = dual_radon(psi, x, Method.EXACT)
    summed = dual_radon(psi, x, Method.QUADRATURE)
    assert exact == pytest.approx(summed, rel=1e-9)
    assert exact == pytest.approx(c_mu_oracle(model) * model.coeff_f(v, x), rel=1e-8)
    with pytest.raises(ValidationError):
        dual_radon(psi.with_side(Side.Z), x)


def test_sphere_radon_of_zero_radius(model, rng):
    f = RegularFunction.single(model, _vector(rng, model.dimension))
    g = model.random_real(rng, 0.5)
    assert sphere_radon(f, model.identity(), g) == pytest.approx(f(g), rel=1e-9)


def test_sphere_radon_methods_agree(model, rng):
    f = RegularFunction.single(model, _vector(rng, model.dimension))
    g, a = model.random_real(rng, 0.5), model.a_element(0.4)
    assert sphere_radon(f, a, g, Method.EXACT) == pytest.approx(sphere_radon(f, a, g, Method.QUADRATURE), rel=1e-9)
    assert sphere_radon_dual(f, a, g, Method.EXACT) == pytest.approx(
        sphere_radon_dual(f, a, g, Method.QUADRATURE), rel=1e-9)


def test_sphere_duality(model, rng):
    f = RegularFunction.single(model, _vector(rng, model.dimension))
    phi = RegularFunction.single(model, _vector(rng, model.dimension))
    pairing = sphere_pairing(f, phi, model.compact_torus(0.7))
    assert pairing["left"] == pytest.approx(pairing["right"], rel=1e-8, abs=1e-10)


def test_kernel_operators_invert_gamma(model, rng):
    v = _vector(rng, model.dimension)
    point = model.random_real(rng, 0.6)
    f = RegularFunction.single(model, v, Side.Z)
    psi = RegularFunction.single(model, v, Side.XI)
    for method in (KernelMethod.QUADRATURE, KernelMethod.SCHUR):
        assert kernel_operator_KZ(f, point, method=method) == pytest.approx(model.coeff_psi(v, point), rel=1e-8)
        assert kernel_operator_KXi(psi, point, method=method) == pytest.approx(model.coeff_f(v, point), rel=1e-8)


def test_kernel_truncation_only_needs_to_cover(rng):
    model = _model("SL", (2,), [1])
    v = _vector(rng, model.dimension)
    f = RegularFunction.single(model, v)
    point = model.random_real(rng, 0.6)
    base = kernel_operator_KZ(f, point, method=KernelMethod.QUADRATURE)
    wider = kernel_operator_KZ(f, point, truncation=3, method=KernelMethod.QUADRATURE)
    assert wider == pytest.approx(base, rel=1e-9)
    with pytest.raises(TruncationError):
        kernel_operator_KZ(f, point, truncation=0)
    with pytest.raises(ValidationError):
        kernel_operator_KZ(f.with_side(Side.XI), point)


def test_kernel_falls_back_without_haar_rule(rng):
    model = _model("SO", (1, 3), [1])
    v = _vector(rng, model.dimension)
    f = RegularFunction.single(model, v)
    point = model.random_real(rng, 0.6)
    with pytest.raises(UnsupportedError):
        kernel_operator_KZ(f, point, method=KernelMethod.QUADRATURE)
    assert kernel_operator_KZ(f, point) == pytest.approx(model.coeff_psi(v, point), rel=1e-8)


def test_kernel_kz_at_identity_sums_constants():
    space = make_space("SL", (2,))
    models = spherical_models(space, 2)
    assert [m.dimension for m in models] == [1, 3, 5]
    expected = sum(m.dimension * m.c_mu_oracle() * m.f_highest(m.identity()) for m in models)
    assert kernel_kZ(models, models[0].identity()) == pytest.approx(expected)
    with pytest.raises(ValidationError):
        spherical_models(space, -1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_kernel_tilde_closed_form(rng, r: int):
    space = make_space("SL2", (r,))
    trivial = build_model(space, weight_from_omega([0] * r, space.rs))
    g = trivial.a_element(rng.uniform(0.4, 1.0, size=r)) @ trivial.random_k(rng)
    assert in_domain_O(trivial, g)
    series = kernel_tilde(space, g, 8)
    assert series.in_domain
    assert series.error <= series.tail_bound + 1e-12
    assert series.to_dict()["closedForm"] == pytest.approx(series.closed_form)


def test_kernel_tilde_outside_domain():
    space = make_space("SL", (2,))
    trivial = build_model(space, weight_from_omega([0], space.rs))
    series = kernel_tilde(space, trivial.a_element(-0.5), 4)
    assert not series.in_domain
    assert series.closed_form is None
    assert series.error is None


def test_group_spheres(rng):
    model = _model("SO", (1, 2), [1])
    center = model.random_real(rng, 0.5)
    sphere = GroupSphere(model, center, -0.5)
    assert sphere.radius.tolist() == [0.5]
    assert sphere.same_as(GroupSphere(model, center @ model.random_k(rng), 0.5))
    assert not sphere.same_as(GroupSphere(model, center, 0.8))


def test_point_embedding_pairs_with_functions(rng):
    models = [_model("SL", (2,), [k]) for k in range(3)]
    f = RegularFunction.random(models, rng)
    g = models[0].random_real(rng, 0.5)
    point = embedding_coeffs(EmbeddingKind.IOTA_E, models, g)
    assert point.truncation == [(0,), (1,), (2,)]
    assert point.pair(f) == pytest.approx(f(g), rel=1e-10)
    with pytest.raises(ValidationError):
        embedding_coeffs(EmbeddingKind.IOTA_E, models[:1], g).pair(f)
    with pytest.raises(ValidationError):
        embedding_coeffs(EmbeddingKind.IOTA_A, models)
    assert set(point.distance(point).values()) == {0.0}
    assert isinstance(DualCoefficients().to_dict(), dict)


def test_spheres_tend_to_horospheres():
    models = [_model("SO", (1, 2), [k]) for k in (1, 2, 3)]
    report = sphere_to_horosphere_limit(models, [float(t) for t in range(1, 11)])
    assert report["converged"]
    for row in report["components"]:
        assert row["monotone"]
        assert row["distances"][-1] < 1e-4
        assert row["decayRate"] is None or row["decayRate"] > 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sphere_limit_tolerates_roundoff_at_large_radius(k: int):
    model = _model("SO", (1, 2), [k])
    row = sphere_to_horosphere_limit([model], [float(t) for t in range(1, 11)])["components"][0]
    assert row["monotone"]
    assert len(row["noiseFloor"]) == 10


def test_decreases_to_plateau():
    noise = [1e-12] * 4
    assert decreases_to_plateau([1.0, 0.1, 1e-8, 2e-8], noise, 1e-6)
    assert not decreases_to_plateau([1.0, 0.1, 1e-8, 1e-3], noise, 1e-6)
    assert not decreases_to_plateau([1.0, 0.1, 0.2, 1e-8], noise, 1e-6)
    assert decreases_to_plateau([1.0, 1.0 + 1e-13], noise, 1e-6)
