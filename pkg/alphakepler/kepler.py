from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import solve_ivp

from .conformable import Jet, abs_power, check_alpha, seed, spow, sqrt, value_of
from .error import DomainError, SingularWeightError
from .report import ResidualCollector, VerificationReport, relative_residual
from .types import FloatArray, Num

HYPERPLANE_FRACTION = 1e-6

IntegrationMethod = Literal["RK45", "DOP853"]


@dataclass(frozen=True)
class KeplerParams:
    m: float
    k: float

    def __post_init__(self) -> None:
        if not (self.m > 0 and self.k > 0):
            raise DomainError(f"mass and coupling must be positive, got m={self.m}, k={self.k}")


@dataclass(frozen=True)
class TrajectoryEvent:
    t: float
    index: int
    kind: Literal["hyperplane-approach", "step-failure"]

    def to_json(self) -> dict[str, object]:
        return {"t": self.t, "index": self.index, "kind": self.kind}


@dataclass(frozen=True)
class Trajectory:
    times: FloatArray
    states: FloatArray
    events: tuple[TrajectoryEvent, ...] = ()

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class HyperplaneGuard:
    """Terminal solve_ivp event for |x_index| shrinking below `threshold`."""

    index: int
    threshold: float

    terminal = True
    direction = -1.0

    def __call__(self, t: float, y: FloatArray) -> float:
        return float(abs(y[self.index]) - self.threshold)


def check_interior(x: Sequence[float] | FloatArray, alpha: float) -> None:
    if alpha != 1 and any(abs(float(c)) == 0 for c in x):
        raise SingularWeightError(
            f"every coordinate must be nonzero when alpha != 1, got {list(map(float, x))}"
        )


def r_alpha(q: Sequence[Num], alpha: float) -> Num:
    check_alpha(alpha)

    if all(value_of(c) == 0 for c in q):
        raise SingularWeightError("position vector vanishes")

    return alpha * sqrt(sum(abs_power(c, 2 * alpha) for c in q))


def kepler_hamiltonian(x: Sequence[Num], params: KeplerParams, alpha: float) -> Num:
    q, p = x[:3], x[3:]

    kinetic = alpha**2 * sum(abs_power(c, 2 * alpha) for c in p) / (2 * params.m)

    return kinetic - params.k / r_alpha(q, alpha)


def _rhs(x: Sequence[Num], params: KeplerParams, alpha: float) -> list[Num]:
    q, p = x[:3], x[3:]
    r = r_alpha(q, alpha)

    q_dot = [
        alpha / params.m * spow(pi, alpha) * abs_power(qi, 1 - alpha)
        for qi, pi in zip(q, p, strict=True)
    ]
    p_dot = [
        -alpha * params.k / r**3 * spow(qi, alpha) * abs_power(pi, 1 - alpha)
        for qi, pi in zip(q, p, strict=True)
    ]

    return q_dot + p_dot


def hamilton_rhs(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> FloatArray:
    return np.array([value_of(c) for c in _rhs(list(map(float, x)), params, alpha)])


def newton_law(x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float) -> FloatArray:
    """
    Acceleration of the conformable Newton law as obtained by differentiating
    Hamilton's equations along the flow.
    """

    point = np.asarray(x, dtype=float)
    q, p = point[:3], point[3:]
    r = value_of(r_alpha(list(q), alpha))

    attraction = -(alpha**3) * params.k / (params.m * r**3) * q

    if alpha == 1:
        return attraction

    deformation = alpha**2 / params.m**2 * (1 - alpha) * q * abs_power(p / q, 2 * alpha)

    return attraction + deformation


def mixed_newton_law(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> FloatArray:
    """
    The deformation term written as q p (p / q)^(2 (alpha - 1)). It agrees with
    `newton_law` only at alpha = 1 or where p_i = (q^i)^2.
    """

    point = np.asarray(x, dtype=float)
    q, p = point[:3], point[3:]
    r = value_of(r_alpha(list(q), alpha))

    attraction = -(alpha**3) * params.k / (params.m * r**3) * q

    if alpha == 1:
        return attraction

    deformation = alpha**2 / params.m**2 * (1 - alpha) * q * p * abs_power(p / q, 2 * (alpha - 1))

    return attraction + deformation


def flow_acceleration(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> FloatArray:
    """Second time derivative of q, from the chain rule through the right hand side."""

    velocity = hamilton_rhs(x, params, alpha)
    jets = _rhs(seed(np.asarray(x, dtype=float)), params, alpha)

    return np.array([
        float(c.partials @ velocity) if isinstance(c, Jet) else 0.0 for c in jets[:3]
    ])


def newton_residual(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> FloatArray:
    check_interior(x, alpha)

    return flow_acceleration(x, params, alpha) - newton_law(x, params, alpha)


def integrate_flow(
    rhs: Callable[[float, FloatArray], FloatArray],
    x0: FloatArray,
    t_end: float,
    rel_tol: float,
    *,
    method: IntegrationMethod = "RK45",
    guards: Sequence[HyperplaneGuard] = (),
) -> Trajectory:
    if not 1e-13 <= rel_tol <= 1e-3:
        raise DomainError(f"rel_tol must be in [1e-13, 1e-3], got {rel_tol}")

    if t_end < 0:
        raise DomainError(f"t_end must be nonnegative, got {t_end}")

    start = np.asarray(x0, dtype=float)

    if t_end == 0:
        return Trajectory(np.zeros(1), start[np.newaxis, :].copy())

    solution = solve_ivp(
        rhs,
        (0.0, t_end),
        start,
        method=method,
        rtol=rel_tol,
        atol=rel_tol * 1e-2,
        events=list(guards) or None,
    )

    events: list[TrajectoryEvent] = []

    if solution.status == -1:
        events.append(TrajectoryEvent(float(solution.t[-1]), -1, "step-failure"))

    for guard, hits in zip(guards, solution.t_events or [], strict=False):
        events.extend(
            TrajectoryEvent(float(t), guard.index, "hyperplane-approach") for t in hits
        )

    return Trajectory(
        np.asarray(solution.t, dtype=float),
        np.asarray(solution.y, dtype=float).T,
        tuple(sorted(events, key=lambda e: e.t)),
    )


def hyperplane_guards(x0: FloatArray, alpha: float) -> list[HyperplaneGuard]:
    if alpha == 1:
        return []

    return [
        HyperplaneGuard(i, HYPERPLANE_FRACTION * abs(float(c))) for i, c in enumerate(x0)
    ]


def integrate_orbit(
    x0: Sequence[float] | FloatArray,
    params: KeplerParams,
    alpha: float,
    t_end: float,
    rel_tol: float,
    *,
    method: IntegrationMethod = "RK45",
) -> Trajectory:
    check_alpha(alpha)

    start = np.asarray(x0, dtype=float)

    if start.shape != (6,):
        raise DomainError(f"a Cartesian state has 6 coordinates, got {start.size}")

    check_interior(start, alpha)

    return integrate_flow(
        lambda _, y: hamilton_rhs(y, params, alpha),
        start,
        t_end,
        rel_tol,
        method=method,
        guards=hyperplane_guards(start, alpha),
    )


def _invariants(x: FloatArray, params: KeplerParams, alpha: float) -> dict[str, FloatArray]:
    from .symmetry import angular_momentum, lrl_vector

    return {
        "H": np.array([value_of(kepler_hamiltonian(list(x), params, alpha))]),
        "L": angular_momentum(x, alpha),
        "A": lrl_vector(x, params, alpha),
    }


def invariant_drifts(
    traj: Trajectory, params: KeplerParams, alpha: float
) -> dict[str, FloatArray]:
    """
    Per sample relative drift of H, L and A from their initial values. The
    floors keep circular orbits (A = 0) and radial ones (L = 0) measurable.
    """

    initial = _invariants(traj.states[0], params, alpha)
    potential = params.k / value_of(r_alpha(list(traj.states[0][:3]), alpha))

    scales = {
        "H": max(abs(float(initial["H"][0])), potential),
        "L": max(
            float(np.linalg.norm(initial["L"])),
            alpha**2
            * float(np.linalg.norm(spow(traj.states[0][:3], alpha)))
            * float(np.linalg.norm(spow(traj.states[0][3:], alpha))),
        ),
        "A": max(float(np.linalg.norm(initial["A"])), params.m * params.k),
    }

    drifts: dict[str, list[float]] = {name: [] for name in initial}

    for state in traj.states:
        current = _invariants(state, params, alpha)

        for name, value in current.items():
            drifts[name].append(float(np.max(np.abs(value - initial[name]))) / scales[name])

    return {name: np.asarray(values) for name, values in drifts.items()}


def conservation_report(
    traj: Trajectory, params: KeplerParams, alpha: float, tol: float = 1e-7
) -> VerificationReport:
    if not len(traj):
        raise DomainError("cannot report on an empty trajectory")

    collector = ResidualCollector()
    drifts = invariant_drifts(traj, params, alpha)

    collector.extend(np.max(np.vstack(list(drifts.values())), axis=0))

    return VerificationReport.build("orbit-conservation", collector, alpha, tol)


TRAJECTORY_HEADER = (
    "t",
    *(f"q{i}" for i in (1, 2, 3)),
    *(f"p{i}" for i in (1, 2, 3)),
    "H",
    *(f"L{i}" for i in (1, 2, 3)),
    *(f"A{i}" for i in (1, 2, 3)),
)


def trajectory_table(traj: Trajectory, params: KeplerParams, alpha: float) -> FloatArray:
    """One row per sample, columns as in `TRAJECTORY_HEADER`."""

    rows = [
        np.concatenate(([t], state, *_invariants(state, params, alpha).values()))
        for t, state in zip(traj.times, traj.states, strict=True)
    ]

    return np.asarray(rows, dtype=float)


def vis_viva_residual(x: Sequence[float] | FloatArray, params: KeplerParams) -> float:
    """Relative mismatch of v^2 = k(2/r - 1/a)/m at an alpha = 1 bound state."""

    point = np.asarray(x, dtype=float)
    energy = value_of(kepler_hamiltonian(list(point), params, 1.0))

    if energy >= 0:
        raise DomainError("vis-viva needs a bound state")

    semi_major = -params.k / (2 * energy)
    r = float(np.linalg.norm(point[:3]))

    speed_squared = float(point[3:] @ point[3:]) / params.m**2
    expected = params.k * (2 / r - 1 / semi_major) / params.m

    return relative_residual(speed_squared - expected, speed_squared, expected)


def kepler_period(x: Sequence[float] | FloatArray, params: KeplerParams) -> float:
    energy = value_of(kepler_hamiltonian(list(map(float, x)), params, 1.0))

    if energy >= 0:
        raise DomainError("only bound alpha = 1 orbits have a period")

    semi_major = -params.k / (2 * energy)

    return float(2 * np.pi * np.sqrt(params.m * semi_major**3 / params.k))
