import math

import numpy as np
import pytest

from alphakepler.error import DomainError, ZeroEnergyError
from alphakepler.kepler import KeplerParams, kepler_hamiltonian
from alphakepler.sampling import branch_points, make_rng, phase_points
from alphakepler.symmetry import (
    Branch,
    GeneratorMatrix,
    angular_momentum,
    casimir1,
    energy_branch,
    first_integral_residuals,
    generator_matrix,
    lrl_vector,
    scaled_rlp,
    so3_report,
    so4_so13_report,
    symmetry_vectors,
)

UNIT = KeplerParams(1.0, 1.0)
CIRCULAR = np.array([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])
ECCENTRIC = np.array([1.0, 0.0, 0.0, 0.0, 1.2, 0.0])
HYPERBOLIC = np.array([1.0, 0.0, 0.0, 0.0, 2.0, 0.0])


def test_angular_momentum() -> None:
    np.testing.assert_allclose(angular_momentum(CIRCULAR, 1), [0, 0, 1])
    np.testing.assert_allclose(angular_momentum(CIRCULAR, 2), [0, 0, 4])


def test_lrl_vector() -> None:
    np.testing.assert_allclose(lrl_vector(ECCENTRIC, UNIT, 1), [0.44, 0, 0], atol=1e-15)
    np.testing.assert_allclose(lrl_vector(CIRCULAR, UNIT, 1), [0, 0, 0], atol=1e-15)


def test_scaled_vector_below_zero_energy() -> None:
    gamma, branch = scaled_rlp(ECCENTRIC, UNIT, 1)

    assert branch is Branch.MINUS
    assert gamma[0] == pytest.approx(-0.44 / math.sqrt(0.56))
    assert gamma[0] == pytest.approx(-0.587975, abs=1e-6)


def test_hyperbolic_point_is_on_plus_branch() -> None:
    gamma, branch = scaled_rlp(HYPERBOLIC, UNIT, 1)

    assert branch is Branch.PLUS
    # H = 1, A = (3, 0, 0), sqrt(2 m H) = sqrt(2)
    assert gamma[0] == pytest.approx(-3 / math.sqrt(2))


def test_zero_energy_is_rejected() -> None:
    with pytest.raises(ZeroEnergyError, match="zero-energy boundary"):
        energy_branch(0.0)

    with pytest.raises(ZeroEnergyError):
        scaled_rlp([1.0, 0.0, 0.0, 0.0, math.sqrt(2), 0.0], UNIT, 1)


def test_symmetry_vectors_bundle() -> None:
    vectors = symmetry_vectors(ECCENTRIC, UNIT, 1)

    assert vectors.branch is Branch.MINUS
    np.testing.assert_allclose(vectors.L, [0, 0, 1.2])
    np.testing.assert_allclose(vectors.A, [0.44, 0, 0], atol=1e-15)


def test_casimir_at_circular_point() -> None:
    from_matrix, from_vectors = casimir1(CIRCULAR, UNIT, 1)

    assert from_matrix == pytest.approx(2.0)
    assert from_vectors == pytest.approx(2.0)


def test_casimir_at_eccentric_point() -> None:
    from_matrix, from_vectors = casimir1(ECCENTRIC, UNIT, 1)

    assert from_vectors == pytest.approx(3.571429, abs=1e-6)
    assert from_matrix == pytest.approx(from_vectors)


def test_generator_matrix_shapes() -> None:
    below = generator_matrix(ECCENTRIC, UNIT, 1)
    above = generator_matrix(HYPERBOLIC, UNIT, 1)

    assert below.algebra == "so4"
    np.testing.assert_allclose(below.M, -below.M.T)

    assert above.algebra == "so13"
    np.testing.assert_allclose(above.M[:3, :3], -above.M[:3, :3].T)
    np.testing.assert_allclose(above.M[:3, 3], above.M[3, :3])


def test_generator_matrix_rejects_unknown_algebra() -> None:
    with pytest.raises(ValueError, match='unknown algebra "so5"'):
        GeneratorMatrix(np.zeros((4, 4)), "so5")


def test_first_integrals_commute_with_energy() -> None:
    for alpha in (1.0, 1.5):
        (point,) = branch_points(make_rng(1, 120), 1, UNIT, alpha, Branch.MINUS)

        assert max(first_integral_residuals(point, UNIT, alpha)) < 1e-9


@pytest.mark.parametrize(("alpha", "tol"), [(1.0, 1e-10), (1.5, 1e-8), (2.0, 1e-8)])
def test_so3_structure(alpha: float, tol: float) -> None:
    points = phase_points(make_rng(2, 121), 100)

    report = so3_report(list(points), alpha, tol)

    assert report.identity == "so3-structure"
    assert report.n_points == 100
    assert report.passed, report


@pytest.mark.parametrize("branch", list(Branch))
def test_so4_and_so13_structure(branch: Branch) -> None:
    points = branch_points(make_rng(3, 122), 3, UNIT, 1.5, branch)

    report = so4_so13_report(list(points), UNIT, 1.5, 1e-7, branch=branch)

    expected = "so4-structure" if branch is Branch.MINUS else "so13-structure"

    assert report.identity == expected
    assert report.passed, report


def test_so4_report_rejects_wrong_branch() -> None:
    with pytest.raises(DomainError, match="point on the plus branch, expected minus"):
        so4_so13_report([HYPERBOLIC], UNIT, 1, 1e-7, branch=Branch.MINUS)


def test_branch_points_land_on_requested_branch() -> None:
    for branch in Branch:
        for point in branch_points(make_rng(4, 0), 10, UNIT, 1.7, branch):
            assert energy_branch(float(kepler_hamiltonian(list(point), UNIT, 1.7))) is branch
            assert np.all(point > 0)
