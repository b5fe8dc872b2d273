from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sampling
from .action_angle import ActionAngleState
from .kepler import IntegrationMethod, KeplerParams
from .symmetry import Branch
from .types import FloatArray


@dataclass(frozen=True)
class Campaign:
    """
    Everything an identity check needs: the deformation, the physical
    parameters, and a seeded sampler per identity code.
    """

    alpha: float
    params: KeplerParams
    n_points: int = 100
    seed: int = 0
    rel_tol: float = 1e-10
    method: IntegrationMethod = "RK45"

    def rng(self, code: int, *streams: int) -> np.random.Generator:
        return sampling.make_rng(self.seed, code, *streams)

    def phase_points(self, code: int) -> FloatArray:
        return sampling.phase_points(self.rng(code), self.n_points)

    def branch_points(self, code: int, branch: Branch) -> FloatArray:
        stream = self.rng(code, 0 if branch is Branch.MINUS else 1)

        return sampling.branch_points(stream, self.n_points, self.params, self.alpha, branch)

    def equatorial_points(self, code: int) -> FloatArray:
        return sampling.equatorial_points(self.rng(code), self.n_points)

    def action_states(self, code: int) -> list[ActionAngleState]:
        return sampling.action_states(self.rng(code), self.n_points, self.params)
