from collections.abc import Sequence

import numpy as np
import pytest

from alphakepler.kepler import KeplerParams, kepler_hamiltonian
from alphakepler.poisson import (
    BracketField,
    bracket_axiom_report,
    bracket_weights,
    cartesian_bivector,
    cartesian_structure,
    cartesian_symplectic_form,
    central_jacobian,
    commutator,
    compose,
    coordinate,
    hamiltonian_field,
    interior_product,
    lie_derivative_2form,
    lie_derivative_tensor,
    nijenhuis_torsion,
    poisson_bracket,
    schouten_bracket,
    torsion_tensor,
)
from alphakepler.sampling import make_rng, phase_points
from alphakepler.symmetry import primed_angular_momentum_fields
from alphakepler.types import Num, ScalarField

UNIT = KeplerParams(1.0, 1.0)

Q1, Q2, P1 = coordinate(0), coordinate(1), coordinate(3)

ALPHAS = [1.0, 1.25, 1.5, 2.0]


def test_canonical_bracket_at_alpha_one() -> None:
    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])

    assert poisson_bracket(P1, Q1, x, 1) == pytest.approx(1.0)
    assert poisson_bracket(Q1, P1, x, 1) == pytest.approx(-1.0)


def test_deformed_canonical_bracket() -> None:
    x = np.array([3.0, 1.0, 1.0, 2.0, 1.0, 1.0])

    assert poisson_bracket(P1, Q1, x, 2) == pytest.approx(1 / 24)


def test_positions_commute() -> None:
    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])

    assert poisson_bracket(Q1, Q2, x, 1.5) == 0.0


def test_bracket_weights() -> None:
    x = np.array([3.0, 1.0, 1.0, 2.0, 1.0, 1.0])

    np.testing.assert_allclose(bracket_weights(x, 2), [1 / 24, 1 / 4, 1 / 4])


def test_hamiltonian_field_of_energy() -> None:
    x = np.array([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])

    field = hamiltonian_field(lambda y: kepler_hamiltonian(y, UNIT, 1), x, 1)

    np.testing.assert_allclose(field, [0, 1, 0, -1, 0, 0], atol=1e-14)


def test_hamiltonian_field_of_coordinate() -> None:
    x = np.array([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])

    np.testing.assert_allclose(hamiltonian_field(Q1, x, 1), [0, 0, 0, -1, 0, 0])


def test_bracket_matches_field_derivative() -> None:
    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])
    structure = cartesian_structure(1.5)

    def energy(y: Sequence[Num]) -> Num:
        return kepler_hamiltonian(y, UNIT, 1.5)

    # {H, f} is the derivative of f along X_H
    field = structure.hamiltonian_field(energy, x)

    assert structure.bracket(energy, Q1, x) == pytest.approx(field[0])
    assert structure.bracket(Q1, energy, x) == pytest.approx(-field[0])


def test_symplectic_form_inverts_bivector() -> None:
    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])

    composed = compose(cartesian_symplectic_form(x, 1.7), cartesian_bivector(x, 1.7))

    np.testing.assert_allclose(composed, np.eye(6), atol=1e-14)


def test_bivector_is_antisymmetric() -> None:
    bivector = cartesian_bivector(np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8]), 2.0)

    np.testing.assert_array_equal(bivector, -bivector.T)


def test_interior_product_shape_mismatch() -> None:
    with pytest.raises(ValueError, match="cannot contract a vector of length 3"):
        interior_product([1, 2, 3], np.eye(4))


def test_interior_product_contracts_first_slot() -> None:
    form = np.array([[0.0, 2.0], [-2.0, 0.0]])

    np.testing.assert_allclose(interior_product([1.0, 0.0], form), [0.0, 2.0])


def test_central_jacobian_of_quadratic_map() -> None:
    def fn(y: np.ndarray) -> np.ndarray:
        return np.array([y[0] ** 2, y[0] * y[1]])

    jacobian = central_jacobian(fn, [1.5, -2.0])

    np.testing.assert_allclose(jacobian, [[3.0, 0.0], [-2.0, 1.5]], rtol=1e-10)


def test_commutator_of_rotation_and_dilation_vanishes() -> None:
    def rotation(y: np.ndarray) -> np.ndarray:
        return np.array([-y[1], y[0]])

    def dilation(y: np.ndarray) -> np.ndarray:
        return y.copy()

    x = np.array([0.4, 1.3])

    np.testing.assert_allclose(commutator(rotation, dilation, x), 0, atol=1e-9)


def test_commutator_of_coordinate_fields() -> None:
    def first(y: np.ndarray) -> np.ndarray:
        return np.array([1.0, 0.0])

    def second(y: np.ndarray) -> np.ndarray:
        return np.array([0.0, y[0]])

    # [d_x, x d_y] = d_y
    np.testing.assert_allclose(commutator(first, second, np.array([0.3, 0.2])), [0, 1])


def test_hamiltonian_flow_preserves_symplectic_form() -> None:
    structure = cartesian_structure(1.5)
    form = structure.symplectic_form
    assert form is not None

    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])
    lie = lie_derivative_2form(
        structure.field_of(lambda y: kepler_hamiltonian(y, UNIT, 1.5)), form, x
    )

    assert np.max(np.abs(lie)) < 1e-6 * np.max(np.abs(form(x)))


def test_lie_derivative_of_constant_tensor_along_constant_field() -> None:
    def constant(y: np.ndarray) -> np.ndarray:
        return np.array([[1.0, 2.0], [3.0, 4.0]])

    def shift(y: np.ndarray) -> np.ndarray:
        return np.array([1.0, -1.0])

    np.testing.assert_allclose(lie_derivative_tensor(shift, constant, np.zeros(2)), 0)


def test_torsion_of_coordinate_dependent_diagonal_tensor_vanishes() -> None:
    def tensor(y: np.ndarray) -> np.ndarray:
        return np.diag([y[0] ** 2, y[1] + 3.0])

    x = np.array([0.7, 0.4])

    np.testing.assert_allclose(torsion_tensor(tensor, x), 0, atol=1e-8)
    np.testing.assert_allclose(nijenhuis_torsion(tensor, x, [1, 0], [0, 1]), 0, atol=1e-8)


def test_cartesian_bivector_is_poisson() -> None:
    x = np.array([1.3, 0.7, 1.1, 0.9, 1.2, 0.8])
    bivector = cartesian_structure(1.8).bivector

    schouten = schouten_bracket(bivector, bivector, x)

    assert np.max(np.abs(schouten)) < 1e-8


def _polynomial_triple() -> tuple[ScalarField, ScalarField, ScalarField]:
    return (
        lambda x: x[0] * x[3] + x[1] * x[1],
        lambda x: x[4] * x[2] - x[0] * x[5] * x[5],
        lambda x: x[3] * x[3] * x[1] + x[2],
    )


@pytest.mark.parametrize("alpha", ALPHAS)
def test_bracket_axioms_hold_for_polynomial_triple(alpha: float) -> None:
    structure = cartesian_structure(alpha)
    points = phase_points(make_rng(42, 100), 200)

    report = bracket_axiom_report(
        _polynomial_triple(), list(points), structure, 1e-8, alpha=alpha
    )

    assert report.n_points == 200
    assert report.passed, report


@pytest.mark.parametrize("alpha", ALPHAS)
def test_bracket_axioms_hold_for_energy_and_angular_momentum(alpha: float) -> None:
    structure = cartesian_structure(alpha)
    points = phase_points(make_rng(42, 100, 1), 200)
    first, second, _ = primed_angular_momentum_fields(alpha)

    def energy(y: Sequence[Num]) -> Num:
        return kepler_hamiltonian(y, UNIT, alpha)

    report = bracket_axiom_report(
        (energy, first, second), list(points), structure, 1e-8, alpha=alpha
    )

    assert report.n_points == 200
    assert report.passed, report


def test_bracket_field_evaluates_bracket() -> None:
    x = np.array([3.0, 1.0, 1.0, 2.0, 1.0, 1.0])
    field = BracketField(P1, Q1, cartesian_structure(2))

    assert field(list(x)) == pytest.approx(1 / 24)
