import math
from collections.abc import Sequence

import numpy as np
import pytest

from alphakepler.conformable import (
    Jet,
    abs_power,
    alpha_add,
    alpha_distance,
    alpha_sub,
    conformable_differential,
    g_inv,
    g_map,
    gradient,
    seed,
    sin,
    spow,
    sqrt,
    value_of,
)
from alphakepler.error import DomainError, SingularWeightError
from alphakepler.types import Num

POINT = [2.0, 1.0, 1.0, 1.0, 1.0, 1.0]


@pytest.mark.parametrize(
    ("x", "beta", "expected"),
    [(2.0, 1.0, 2.0), (-2.0, 3.0, -8.0), (-4.0, 0.5, -2.0), (0.0, 2.0, 0.0)],
)
def test_signed_power(x: float, beta: float, expected: float) -> None:
    assert spow(x, beta) == pytest.approx(expected)


def test_signed_power_of_zero_with_nonpositive_exponent_is_singular() -> None:
    with pytest.raises(SingularWeightError):
        spow(0.0, 0.0)

    with pytest.raises(SingularWeightError):
        spow(np.array([1.0, 0.0]), -0.5)


def test_signed_power_requires_finite_exponent() -> None:
    with pytest.raises(DomainError, match="exponent must be finite"):
        spow(1.0, math.inf)


def test_signed_power_on_arrays() -> None:
    np.testing.assert_allclose(spow(np.array([-4.0, 9.0]), 0.5), [-2.0, 3.0])


def test_signed_power_of_one_is_exact() -> None:
    for x in (3.0, -0.1, 7.3, 1e-3):
        assert spow(x, 1) == x

    x = np.array([3.0, -0.1, 7.3])

    np.testing.assert_array_equal(spow(x, 1), x)
    assert abs_power(3.0, 2) == 9.0
    assert g_inv(g_map(3.0, 1), 1) == 3.0


def test_abs_power_weight_on_hyperplane() -> None:
    assert abs_power(0.0, 0.0) == 1.0
    assert abs_power(0.0, 0.5) == 0.0

    with pytest.raises(SingularWeightError):
        abs_power(0.0, -0.5)


def test_g_map_and_inverse() -> None:
    assert g_map(3.0, 1) == 3.0
    assert g_map(-2.0, 2) == pytest.approx(-4.0)
    assert g_inv(-4.0, 2) == pytest.approx(-2.0)

    assert g_inv(g_map(-1.7, 2.5), 2.5) == pytest.approx(-1.7)


def test_g_map_rejects_bad_alpha() -> None:
    with pytest.raises(DomainError, match="alpha must be a positive finite number"):
        g_map(1.0, 0.0)


def test_alpha_addition() -> None:
    assert alpha_add(1.0, 2.0, 1) == pytest.approx(3.0)
    assert alpha_add(1.0, 1.0, 2) == pytest.approx(math.sqrt(2))
    assert alpha_sub(3.0, 3.0, 2) == 0.0


def test_alpha_addition_is_commutative_and_has_inverse() -> None:
    a, b, alpha = -0.7, 1.9, 1.6

    assert alpha_add(a, b, alpha) == pytest.approx(alpha_add(b, a, alpha))
    assert alpha_sub(alpha_add(a, b, alpha), b, alpha) == pytest.approx(a)


def test_jet_arithmetic_tracks_partials() -> None:
    x, y = seed([3.0, 2.0])

    result = x * y / (x + 1) - y**2

    assert isinstance(result, Jet)
    assert result.value == pytest.approx(6 / 4 - 4)
    np.testing.assert_allclose(result.partials[:2], [2 / 16, 3 / 4 - 4])


def test_jet_functions() -> None:
    (x,) = seed([0.25])

    assert value_of(sqrt(x)) == pytest.approx(0.5)
    assert sqrt(x).partials[0] == pytest.approx(1.0)
    assert sin(x).partials[0] == pytest.approx(math.cos(0.25))


def test_jet_fractional_power_of_negative_value_is_rejected() -> None:
    (x,) = seed([-1.0])

    with pytest.raises(DomainError, match="non-integer power"):
        _ = x**0.5


def test_seed_is_limited_to_six_slots() -> None:
    with pytest.raises(ValueError, match="at most 6 partials"):
        seed([0.0] * 7)


def test_gradient_of_constant_is_zero() -> None:
    np.testing.assert_array_equal(gradient(lambda x: 5.0, POINT), np.zeros(6))


def test_conformable_differential_of_coordinate() -> None:
    df = conformable_differential(lambda x: x[0], POINT, 2)

    np.testing.assert_allclose(df, [4, 0, 0, 0, 0, 0])


def test_conformable_differential_of_constant() -> None:
    np.testing.assert_array_equal(conformable_differential(lambda x: 1.0, POINT, 1.5), 0)


def test_conformable_differential_of_cube() -> None:
    df = conformable_differential(lambda x: x[0] ** 3, POINT, 1.5)

    assert df[0] == pytest.approx(12 * 1.5 * math.sqrt(2))
    assert df[0] == pytest.approx(25.4558, abs=1e-4)


def test_conformable_differential_is_gradient_at_alpha_one() -> None:
    def f(x: Sequence[Num]) -> Num:
        return x[0] * x[3] + sin(x[1])

    np.testing.assert_allclose(conformable_differential(f, POINT, 1), gradient(f, POINT))


def test_conformable_differential_leibniz_rule() -> None:
    def f(x: Sequence[Num]) -> Num:
        return x[0] * x[1]

    def g(x: Sequence[Num]) -> Num:
        return x[2] + x[0] ** 2

    point = [1.3, 0.7, 1.1, 0.9, 1.2, 0.8]
    alpha = 1.7

    lhs = conformable_differential(lambda x: f(x) * g(x), point, alpha)
    rhs = value_of(f(point)) * conformable_differential(g, point, alpha) + value_of(
        g(point)
    ) * conformable_differential(f, point, alpha)

    np.testing.assert_allclose(lhs, rhs)


def test_alpha_distance() -> None:
    assert alpha_distance([3, 4, 0, 0, 0, 0], 1.5) == pytest.approx(5.0)
