from fractions import Fraction

import pytest

from horolab.algebra import (
    Family,
    Weight,
    WeightSequence,
    catalog_spaces,
    chain_from_levels,
    classify_limit,
    dominance_leq,
    dominant_weights_up_to,
    dual_weight,
    fundamental_spherical_weights,
    height,
    iota,
    is_in_lambda_plus,
    is_minimal_in_fiber,
    make_space,
    omega_coefficients,
    parse_family,
    propagates,
    restrict,
    weight_from_omega,
    weyl_dim,
)
from horolab.algebra.catalog import rho_positivity
from horolab.algebra.roots import _invert_exact, check_mu, to_fraction
from horolab.utils.error_handler import DataError, DimensionError, DomainError, ValidationError


@pytest.fixture
def sl3():
    """Restricted roots of SL(3,R), type A2."""
    return make_space("SL", (3,))


@pytest.fixture
def hyperbolic_chain():
    """SO(1,2) ⊂ SO(1,3) ⊂ SO(1,4)."""
    return chain_from_levels(Family.SO_p_q, 1, [2, 3, 4])


def test_weight_arithmetic():
    a = Weight((1, "1/2"))
    b = Weight((0, Fraction(1, 2)))
    assert a + b == Weight((1, 1))
    assert a - b == Weight((1, 0))
    assert -a == Weight((-1, Fraction(-1, 2)))
    assert a * 2 == Weight((2, 1))
    assert 2 * a == a * 2
    assert Weight.zero(3).is_zero()
    assert to_fraction("3/4") == Fraction(3, 4)


def test_weights_reject_floats():
    with pytest.raises(DataError):
        Weight((0.5,))


def test_weights_of_different_rank():
    with pytest.raises(DimensionError):
        Weight((1,)) + Weight((1, 2))


def test_fundamental_weights_are_dual_to_simple_roots():
    for space in catalog_spaces(3):
        for i, omega in enumerate(fundamental_spherical_weights(space.rs)):
            expected = tuple(Fraction(int(i == j)) for j in range(space.rank))
            assert omega_coefficients(omega, space.rs) == expected


@pytest.mark.parametrize("n", [3, 12, 40])
def test_first_fundamental_weight_of_sl_n(n: int):
    space = make_space("SL", (n,))
    omega_1 = weight_from_omega([1] + [0] * (n - 2), space.rs)
    assert omega_1 == Weight(tuple(Fraction(2 * (n - 1 - i), n) for i in range(n - 1)))
    assert omega_coefficients(omega_1, space.rs)[0] == 1


def test_exact_solver_rejects_bad_input(sl3):
    with pytest.raises(DataError):
        _invert_exact(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))
    with pytest.raises(DimensionError):
        sl3.rs.from_e((1, -1))
    with pytest.raises(DataError):
        sl3.rs.from_e((1, 0, 0))


def test_sl3_fundamental_weight(sl3):
    omega_1 = weight_from_omega([1, 0], sl3.rs)
    assert omega_1 == Weight(("4/3", "2/3"))
    assert omega_coefficients(sl3.rho, sl3.rs) == (Fraction(1, 2), Fraction(1, 2))
    assert not is_in_lambda_plus(sl3.rho, sl3.rs)
    with pytest.raises(DomainError):
        check_mu(sl3.rho, sl3.rs)


def test_dual_weight_swaps_a2_weights(sl3):
    omega_1 = weight_from_omega([1, 0], sl3.rs)
    omega_2 = weight_from_omega([0, 1], sl3.rs)
    assert dual_weight(omega_1, sl3.rs) == omega_2
    so = make_space("SO", (1, 3))
    omega = weight_from_omega([2], so.rs)
    assert dual_weight(omega, so.rs) == omega


def test_dominant_weights_and_height(sl3):
    weights = dominant_weights_up_to(sl3.rs, 2)
    assert len(weights) == 6
    assert weights[0].is_zero()
    assert height(weight_from_omega([1, 2], sl3.rs), sl3.rs) == 3
    assert dominant_weights_up_to(sl3.rs, -1) == []


def test_dominance_order(sl3):
    two_rho = weight_from_omega([1, 1], sl3.rs)
    omega_1 = weight_from_omega([1, 0], sl3.rs)
    zero = Weight.zero(2)
    assert dominance_leq(zero, two_rho, sl3.rs)
    assert not dominance_leq(omega_1, zero, sl3.rs)


def test_weyl_dimension_of_sl2():
    root = Weight((1, -1))
    rho = Weight(("1/2", "-1/2"))
    for k in range(5):
        assert weyl_dim([root], rho, Weight((Fraction(k, 2), Fraction(-k, 2)))) == k + 1


def test_catalog_rank_one_hyperbolic():
    for n in range(2, 7):
        space = make_space("SO", (1, n))
        assert space.rs.type_label == "B"
        assert space.rank == 1
        assert space.multiplicities == (n - 1,)
        assert space.rho == Weight((Fraction(n - 1, 2),))
        assert space.label == f"SO(1,{n})"


def test_catalog_types():
    assert make_space("SU", (2, 2)).rs.type_label == "C"
    assert make_space("SU", (2, 3)).rs.type_label == "BC"
    assert make_space("SO", (2, 2)).rs.type_label == "D"
    assert make_space("SO", (2, 3)).rs.type_label == "B"
    sl4 = make_space("SL", (4,))
    assert len(sl4.rs.positive_roots) == 6
    assert set(sl4.multiplicities) == {1}
    assert make_space("SL2", (3,)).label == "SL(2,R)^3"


def test_rho_is_strictly_dominant():
    for space in catalog_spaces(3):
        assert all(x > 0 for x in rho_positivity(space)), space.label


def test_catalog_parameter_validation():
    with pytest.raises(ValidationError):
        make_space("SO", (1, 1))
    with pytest.raises(ValidationError):
        make_space("SU", (3, 2))
    with pytest.raises(ValidationError):
        make_space("SL", (1,))
    with pytest.raises(ValidationError):
        parse_family("E8")


def test_space_to_dict(sl3):
    data = sl3.to_dict()
    assert data["label"] == "SL(3,R)"
    assert data["type"] == "A"
    assert data["rank"] == 2
    assert data["multiplicities"] == [1, 1, 1]


def test_propagates():
    so2, so3 = make_space("SO", (1, 2)), make_space("SO", (1, 3))
    assert propagates(so2, so3)
    assert not propagates(so3, so2)
    assert propagates(make_space("SL", (2,)), make_space("SL", (3,)))
    # C and BC share the rank but not the type letter
    assert not propagates(make_space("SU", (2, 2)), make_space("SU", (2, 3)))
    assert propagates(make_space("SU", (2, 3)), make_space("SU", (2, 4)))
    with pytest.raises(ValidationError):
        propagates(so2, make_space("SL", (3,)))


def test_iota_keeps_omega_coefficients(hyperbolic_chain):
    lo, hi = hyperbolic_chain[0], hyperbolic_chain[1]
    mu = weight_from_omega([3], lo.rs)
    image = iota(mu, lo, hi)
    assert omega_coefficients(image, hi.rs) == (Fraction(3),)
    assert restrict(image, hi, lo) == mu
    with pytest.raises(DomainError):
        iota(lo.rho, lo, hi)
    with pytest.raises(ValidationError):
        iota(mu, hi, lo)


def test_restriction_along_sl_chain():
    sl2, sl3 = make_space("SL", (2,)), make_space("SL", (3,))
    omega = weight_from_omega([1], sl2.rs)
    assert restrict(weight_from_omega([1, 0], sl3.rs), sl3, sl2) == omega
    assert restrict(weight_from_omega([0, 1], sl3.rs), sl3, sl2).is_zero()
    assert iota(omega, sl2, sl3) == weight_from_omega([1, 0], sl3.rs)


def test_minimal_in_fiber():
    sl2, sl3 = make_space("SL", (2,)), make_space("SL", (3,))
    omega = weight_from_omega([1], sl2.rs)
    assert is_minimal_in_fiber(omega, weight_from_omega([1, 0], sl3.rs), sl3, sl2)
    assert not is_minimal_in_fiber(omega, weight_from_omega([1, 1], sl3.rs), sl3, sl2)
    with pytest.raises(ValidationError):
        is_minimal_in_fiber(omega, weight_from_omega([0, 1], sl3.rs), sl3, sl2)


def test_classify_limit(hyperbolic_chain):
    report = classify_limit(hyperbolic_chain)
    assert report["finiteRank"] is True
    assert report["familyTag"] == "SO(1+∞)"
    growing = classify_limit(chain_from_levels("SL", None, [2, 3, 4]))
    assert growing["finiteRank"] is False
    assert growing["familyTag"] is None
    assert growing["ranks"] == [1, 2, 3]
    with pytest.raises(ValidationError):
        classify_limit([])


def test_weight_sequence():
    chain = chain_from_levels("SL", None, range(2, 6))
    sequence = WeightSequence(chain, (1,))
    assert len(sequence.weights) == 4
    assert sequence.is_dominant()
    assert sequence.restriction_defects() == []
    assert omega_coefficients(sequence.at(3), chain[3].rs) == (1, 0, 0, 0)
    with pytest.raises(DomainError):
        WeightSequence(chain, (-1,))
    with pytest.raises(ValidationError):
        WeightSequence(chain, (1, 0))
    with pytest.raises(ValidationError):
        chain_from_levels("SO", None, [2, 3])
