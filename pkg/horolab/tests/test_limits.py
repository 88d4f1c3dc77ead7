import numpy as np
import pytest

from horolab.algebra import make_space, weight_from_omega
from horolab.limits import (
    PropagatedFamily,
    build_family,
    check_admissible,
    compatible_dual_dimension,
    dual_radon_limit,
    gamma_commute_check,
    graded_proj_check,
    graded_ring_check,
    harmonic_family,
    kernel_limit_check,
    level_algebra,
    multiplicity_one_check,
    noncommuting_defect,
    projective_evaluation_check,
    random_points,
    sl2_product_family,
    sphere_radon_limit,
)
from horolab.representations import build_model
from horolab.utils.error_handler import DomainError, UnsupportedError, ValidationError


@pytest.fixture
def hyperbolic():
    """H², H³, H⁴ with μ = ω."""
    return harmonic_family([2, 3, 4], 1)


@pytest.fixture
def products():
    """SL(2,R), SL(2,R)², SL(2,R)³ with μ = ω₁."""
    return sl2_product_family([1, 2, 3], [1])


def _vector(rng, dimension):
    return rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)


def test_family_metadata(hyperbolic, products):
    assert len(hyperbolic) == 3
    assert hyperbolic.finite_rank
    assert hyperbolic.to_dict()["familyTag"] == "SO(1+∞)"
    assert [m.dimension for m in hyperbolic.models] == [3, 4, 5]
    assert not products.finite_rank
    assert [m.dimension for m in products.models] == [3, 3, 3]


def test_build_family():
    family = build_family("SO", 1, [2, 3], [2])
    assert family.model(1).mu_coefficients == (2,)
    assert len(build_family("SL2", None, [1, 2], [1])) == 2
    with pytest.raises(ValidationError):
        build_family("SO", 1, [2, 3], [1, 1])
    with pytest.raises(UnsupportedError):
        build_family("SU", 2, [3, 4], [1, 0])
    with pytest.raises(UnsupportedError):
        PropagatedFamily([make_space("SL", (3,))], (1, 0))


def test_embed_and_project_compose(hyperbolic, rng):
    v = _vector(rng, hyperbolic.model(0).dimension)
    w = hyperbolic.embed(0, 2, v)
    assert w.shape == (5,)
    assert np.allclose(hyperbolic.project(2, 0, w), v)
    with pytest.raises(ValidationError):
        hyperbolic.embed(2, 0, v)


def test_admissibility():
    assert check_admissible(harmonic_family([2, 3, 4], 1).chain)["admissible"]
    report = check_admissible(sl2_product_family([1, 2], [1]).chain)
    assert report["admissible"]
    assert report["constantRank"] is False
    with pytest.raises(UnsupportedError):
        level_algebra(make_space("SL", (3,)))


def test_family_records_admissibility(hyperbolic, monkeypatch):
    assert hyperbolic.admissible is True
    assert hyperbolic.to_dict()["admissible"] is True
    assert hyperbolic.admissibility["pairs"][0]["lo"] == "SO(1,2)"

    from horolab.limits import family as family_module

    monkeypatch.setattr(family_module, "check_admissible",
                        lambda chain: {"admissible": False, "constantRank": True, "pairs": []})
    assert harmonic_family([2, 3], 1).admissible is False


def test_limit_checks_need_an_admissible_family(rng):
    family = PropagatedFamily(harmonic_family([2, 3], 1).chain, (1,), [2, 3], admissible=False)
    base = family.model(0)
    v = _vector(rng, base.dimension)
    with pytest.raises(DomainError):
        kernel_limit_check(family, 0, v, base.random_real(rng, 0.5))
    with pytest.raises(DomainError):
        dual_radon_limit(family, 0, v, base.identity())
    with pytest.raises(DomainError):
        sphere_radon_limit(family, 0, v, 1.0, base.identity())
    assert family.to_dict()["admissible"] is False


def test_gamma_commutes_with_embeddings(hyperbolic, rng):
    base = hyperbolic.model(0)
    report = gamma_commute_check(hyperbolic, 0, 2, _vector(rng, base.dimension), random_points(base, rng, 4))
    assert report["maxError"] < 1e-9


def test_graded_projection(hyperbolic, rng):
    top = hyperbolic.model(2)
    report = graded_proj_check(hyperbolic, 0, 2, _vector(rng, top.dimension),
                               random_points(hyperbolic.model(0), rng, 4))
    assert report["projEmbedError"] < 1e-10
    assert report["maxError"] < 1e-8


def test_projective_evaluation(products, rng):
    base = products.model(0)
    report = projective_evaluation_check(products, 0, _vector(rng, base.dimension), random_points(base, rng, 3))
    assert report["maxError"] < 1e-10
    assert report["levels"] == 2

    middle = products.model(1)
    report = projective_evaluation_check(products, 1, _vector(rng, middle.dimension), random_points(middle, rng, 2))
    assert report["levels"] == 1
    assert report["startLevel"] == 1


def test_kernel_limit_stabilizes(products, rng):
    base = products.model(0)
    report = kernel_limit_check(products, 0, _vector(rng, base.dimension), base.random_real(rng, 0.6))
    assert len(report["sequence"]) == 3
    assert report["spread"] < 1e-10
    assert report["maxError"] < 1e-8


def test_dual_radon_limit(hyperbolic, rng):
    base = hyperbolic.model(0)
    report = dual_radon_limit(hyperbolic, 0, _vector(rng, base.dimension), base.random_real(rng, 0.6))
    assert report["maxError"] < 1e-8
    assert report["cSequence"] == pytest.approx([0.5, 0.5, 0.5])
    assert report["converged"]


def test_dual_radon_limit_needs_finite_rank(products, rng):
    base = products.model(0)
    with pytest.raises(UnsupportedError):
        dual_radon_limit(products, 0, _vector(rng, base.dimension), base.identity())


def test_sphere_radon_limit(hyperbolic, rng):
    base = hyperbolic.model(0)
    report = sphere_radon_limit(hyperbolic, 0, base.highest_vector, 1.0, base.random_real(rng, 0.3),
                                [float(t) for t in range(1, 8)])
    assert len(report["sequence"]) == 3
    assert report["sweepMonotone"]


def test_noncommuting_defect():
    family = harmonic_family([2, 3], 2)
    rng = np.random.default_rng(7)
    base = family.model(0)
    report = noncommuting_defect(family, 0, 1, _vector(rng, base.dimension), base.random_real(rng, 0.6))
    assert report["maxError"] < 1e-8
    assert report["ratio"] == pytest.approx(report["gkRatio"], rel=1e-8)
    # c along H^n at 2ω is (λ+1)/(2(2λ+1)) with λ = (n-1)/2
    assert report["ratio"] == pytest.approx((3 / 8) / (1 / 3), rel=1e-8)


def test_multiplicity_one():
    lo = build_model(make_space("SO", (1, 2)), weight_from_omega([2], make_space("SO", (1, 2)).rs))
    hi = build_model(make_space("SO", (1, 3)), weight_from_omega([2], make_space("SO", (1, 3)).rs))
    assert multiplicity_one_check(lo, hi)["dimension"] == 1


def test_compatible_duals(hyperbolic, products):
    assert compatible_dual_dimension(hyperbolic)["dimension"] == 1
    assert compatible_dual_dimension(products)["dimension"] == 1


def test_graded_ring(rng):
    space = make_space("SL", (2,))
    left = build_model(space, weight_from_omega([1], space.rs))
    right = build_model(space, weight_from_omega([2], space.rs))
    report = graded_ring_check(left, right, rng, 5)
    assert report["topMu"] == [3]
    assert report["maxError"] < 1e-9
