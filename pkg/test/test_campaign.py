import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.kepler import KeplerParams, kepler_hamiltonian
from alphakepler.sampling import (
    ACTION_BOX,
    BOX,
    EQUATORIAL_BOX,
    MIN_EIGENVALUE,
    make_rng,
    phase_points,
)
from alphakepler.symmetry import Branch, energy_branch

CAMPAIGN = Campaign(1.5, KeplerParams(1.0, 1.0), n_points=8, seed=3)


def test_streams_are_reproducible() -> None:
    first = phase_points(make_rng(3, 110), 4)
    second = phase_points(make_rng(3, 110), 4)

    np.testing.assert_array_equal(first, second)


def test_codes_get_distinct_streams() -> None:
    assert not np.array_equal(CAMPAIGN.phase_points(110), CAMPAIGN.phase_points(111))


def test_seed_changes_samples() -> None:
    other = Campaign(1.5, KeplerParams(1.0, 1.0), n_points=8, seed=4)

    assert not np.array_equal(CAMPAIGN.phase_points(110), other.phase_points(110))


def test_phase_points_lie_in_box() -> None:
    points = CAMPAIGN.phase_points(110)

    assert points.shape == (8, 6)
    assert np.all((points >= BOX[0]) & (points <= BOX[1]))


def test_equatorial_points_lie_in_box() -> None:
    points = CAMPAIGN.equatorial_points(130)

    assert points.shape == (8, 4)
    assert np.all(points >= EQUATORIAL_BOX[:, 0])
    assert np.all(points <= EQUATORIAL_BOX[:, 1])


def test_branch_points_have_requested_energy_sign() -> None:
    for branch in Branch:
        points = CAMPAIGN.branch_points(122, branch)

        assert len(points) == 8

        for point in points:
            energy = float(kepler_hamiltonian(list(point), CAMPAIGN.params, CAMPAIGN.alpha))

            assert energy_branch(energy) is branch


def test_action_states_keep_eigenvalues_apart() -> None:
    states = CAMPAIGN.action_states(150)

    assert len(states) == 8

    for state in states:
        assert ACTION_BOX[0][0] <= state.J1 <= ACTION_BOX[0][1]
        assert ACTION_BOX[1][0] <= state.J2 <= ACTION_BOX[1][1]
        assert abs(state.J1 - 2 * state.J2) >= MIN_EIGENVALUE
