from __future__ import annotations

import math

import numpy as np

from .action_angle import ActionAngleState
from .conformable import g_inv
from .kepler import KeplerParams, r_alpha
from .symmetry import Branch
from .types import FloatArray

BOX = (0.5, 2.0)

EQUATORIAL_BOX = np.array([
    [0.5, 2.0],
    [-1.0, 1.0],
    [0.4, math.pi - 0.4],
    [0.3, 1.5],
])

# kinetic energy as a fraction of k / r_alpha, away from H = 0 on both sides
BOUND_FRACTIONS = (0.2, 0.8)
SCATTERING_FRACTIONS = (1.25, 3.0)

ACTION_BOX = ((0.2, 2.0), (0.05, 1.0))
MIN_EIGENVALUE = 0.1


def make_rng(seed: int, *streams: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *streams])))


def phase_points(rng: np.random.Generator, n: int) -> FloatArray:
    return rng.uniform(*BOX, size=(n, 6))


def branch_points(
    rng: np.random.Generator,
    n: int,
    params: KeplerParams,
    alpha: float,
    branch: Branch,
) -> FloatArray:
    """
    Points of the positive orthant with H below zero (`Branch.MINUS`) or above
    it. The conformable momentum image is drawn with a fixed kinetic energy
    and mapped back to p.
    """

    low, high = BOUND_FRACTIONS if branch is Branch.MINUS else SCATTERING_FRACTIONS
    points = np.empty((n, 6))

    for row in points:
        q = rng.uniform(*BOX, size=3)
        kinetic = rng.uniform(low, high) * params.k / float(r_alpha(list(q), alpha))

        direction = rng.uniform(*BOX, size=3)
        image = math.sqrt(2 * params.m * kinetic) * direction / np.linalg.norm(direction)

        row[:3] = q
        row[3:] = g_inv(image / alpha, alpha)

    return points


def equatorial_points(rng: np.random.Generator, n: int) -> FloatArray:
    return rng.uniform(EQUATORIAL_BOX[:, 0], EQUATORIAL_BOX[:, 1], size=(n, 4))


def action_states(
    rng: np.random.Generator, n: int, params: KeplerParams
) -> list[ActionAngleState]:
    states: list[ActionAngleState] = []

    while len(states) < n:
        j1 = rng.uniform(*ACTION_BOX[0])
        j2 = rng.uniform(*ACTION_BOX[1])
        angles = rng.uniform(0.0, 2 * math.pi, size=2)

        if abs(j1 - 2 * j2) >= MIN_EIGENVALUE:
            states.append(ActionAngleState(j1, j2, *angles, params=params))

    return states
