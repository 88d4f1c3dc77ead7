from fractions import Fraction
import math

import pytest

from horolab.algebra import Family, Weight, WeightSequence, catalog_spaces, chain_from_levels, make_space, weight_from_omega
from horolab.analysis import CALIBRATED_EXPONENT, c_function, c_infinity, c_mu, c_table, rank_one_integral_oracle
from horolab.utils.error_handler import DimensionError, DomainError, UnsupportedError, ValidationError


def _pochhammer(x: float, k: int) -> float:
    return math.prod(x + j for j in range(k))


def test_normalized_at_rho():
    for space in catalog_spaces(3):
        value = c_function(space, space.rho)
        assert value.well_defined
        assert value.value == pytest.approx(1.0, abs=1e-12)
        assert value.log_value == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 7])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_hyperbolic_closed_form(n: int, k: int):
    space = make_space("SO", (1, n))
    lam = (n - 1) / 2
    expected = _pochhammer(lam, k) / _pochhammer(2 * lam, k)
    assert c_mu(space, weight_from_omega([k], space.rs)) == pytest.approx(expected, rel=1e-12)


def test_first_level_is_one_half_everywhere():
    for n in range(2, 10):
        space = make_space("SO", (1, n))
        assert c_mu(space, weight_from_omega([1], space.rs)) == pytest.approx(0.5, rel=1e-12)


def test_sl_first_fundamental_weight():
    for n in range(2, 9):
        space = make_space("SL", (n,))
        coefficients = [1] + [0] * (n - 2)
        assert c_mu(space, weight_from_omega(coefficients, space.rs)) == pytest.approx(1.0 / n, rel=1e-12)


def test_pole_is_not_well_defined():
    space = make_space("SO", (1, 3))
    value = c_function(space, Weight.zero(1))
    assert not value.well_defined
    assert math.isnan(value.value)
    assert value.to_dict()["wellDefined"] is False


def test_c_function_rank_mismatch():
    with pytest.raises(DimensionError):
        c_function(make_space("SL", (3,)), Weight((1,)))


def test_c_mu_exponents():
    space = make_space("SO", (1, 3))
    mu = weight_from_omega([2], space.rs)
    full = c_mu(space, mu)
    assert CALIBRATED_EXPONENT == 1
    assert c_mu(space, mu, "1/2") == pytest.approx(math.sqrt(full), rel=1e-12)
    with pytest.raises(ValidationError):
        c_mu(space, mu, 2)
    assert c_mu(space, space.rho) == pytest.approx(c_function(space, space.rho + space.rho).value)
    with pytest.raises(DomainError):
        c_mu(space, Weight((Fraction(1, 2),)))


def test_rank_one_oracle_agrees_with_product():
    for q in (2, 3, 4):
        space = make_space("SO", (1, q))
        assert rank_one_integral_oracle(space, space.rho) == pytest.approx(1.0, rel=1e-6)
        for k in (1, 2):
            lam = space.rho + weight_from_omega([k], space.rs)
            assert rank_one_integral_oracle(space, lam) == pytest.approx(c_function(space, lam).value, rel=1e-6)


def test_rank_one_oracle_domain():
    with pytest.raises(UnsupportedError):
        sl3 = make_space("SL", (3,))
        rank_one_integral_oracle(sl3, sl3.rho)
    space = make_space("SO", (1, 3))
    with pytest.raises(DomainError):
        rank_one_integral_oracle(space, Weight((Fraction(-1, 2),)))


def test_c_infinity_constant_sequence():
    chain = chain_from_levels(Family.SO_p_q, 1, range(2, 12))
    report = c_infinity(chain, WeightSequence(chain, (1,)).weights)
    assert report["converged"] is True
    assert report["limitEstimate"] == pytest.approx(0.5, rel=1e-12)
    assert len(report["sequence"]) == 10


def test_c_infinity_second_level_converges_to_a_quarter():
    chain = chain_from_levels(Family.SO_p_q, 1, range(2, 41))
    report = c_infinity(chain, WeightSequence(chain, (2,)).weights)
    # (λ)_2/(2λ)_2 = (λ+1)/(2(2λ+1)) tends to 1/4
    assert report["sequence"][-1] == pytest.approx(0.25, abs=1e-2)
    assert all(b < a for a, b in zip(report["sequence"], report["sequence"][1:]))


def test_c_infinity_validation():
    chain = chain_from_levels(Family.SO_p_q, 1, [2, 3])
    with pytest.raises(ValidationError):
        c_infinity(chain, [Weight((1,))])
    with pytest.raises(ValidationError):
        c_infinity([], [])


def test_c_table():
    rows = c_table(make_space("SO", (1, 3)), 2)
    assert [r["mu"] for r in rows] == [[0], [1], [2]]
    assert rows[0]["cValue"] == pytest.approx(1.0)
    assert rows[1]["cValue"] == pytest.approx(0.5)
    assert rows[2]["cValue"] == pytest.approx(1.0 / 3.0)
