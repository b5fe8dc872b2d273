"""
Bound Kepler motion in action-angle coordinates x = (J1, J2, phi1, phi2).

Every quantity depends on the actions through S = J1 + 2 J2, the energy being
E = -m k^2 / (2 S^2). The second Poisson structure, its symplectic form and
the recursion operator are built from

    R = [[J1, J2], [4 J2, J1]]

with det R = J1^2 - 4 J2^2, whose eigenvalues J1 -+ 2 J2 are constants of the
motion.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import quad

from .conformable import gradient, log, value_of
from .error import AngleDomainError, DomainError, SingularRecursionError, UnboundStateError
from .kepler import IntegrationMethod, KeplerParams, Trajectory, integrate_flow
from .poisson import (
    PoissonStructure,
    central_jacobian,
    commutator,
    interior_product,
    lie_derivative_2form,
    schouten_bracket,
    torsion_tensor,
)
from .report import ResidualCollector, VerificationReport, relative_residual
from .types import FloatArray, Num, ScalarField, TensorField, VectorField

ACTIONS = (0, 1)
ANGLES = (2, 3)

# the hierarchy fields all point along d/dphi1 + 2 d/dphi2
DIRECTION = np.array([0.0, 0.0, 1.0, 2.0])

ROUND_OFF = 1e-12

QUAD_TOL = 1e-13


@dataclass(frozen=True)
class ActionAngleState:
    J1: float
    J2: float
    phi1: float
    phi2: float
    params: KeplerParams

    def __post_init__(self) -> None:
        if not self.J1 + 2 * self.J2 > 0:
            raise UnboundStateError(
                f"J1 + 2 J2 must be positive for bound motion, got J = ({self.J1}, {self.J2})"
            )

    @property
    def S(self) -> float:
        return self.J1 + 2 * self.J2

    @property
    def D(self) -> float:
        return 2 * self.J2

    @property
    def point(self) -> FloatArray:
        return np.array([self.J1, self.J2, self.phi1, self.phi2])

    @classmethod
    def at(cls, x: FloatArray, params: KeplerParams) -> ActionAngleState:
        return cls(*map(float, x), params=params)


@dataclass(frozen=True)
class HierarchyBundle:
    H: tuple[float, float, float, float]
    X: tuple[float, float, float, float]

    def field(self, i: int) -> FloatArray:
        return self.X[i] * DIRECTION


def actions_from_state(E: float, D: float, params: KeplerParams) -> tuple[float, float]:
    if E >= 0:
        raise UnboundStateError(f"actions exist for bound motion only, got E = {E}")

    if D < 0:
        raise DomainError(f"the separation constant must be nonnegative, got D = {D}")

    scale = params.m * params.k / math.sqrt(-2 * params.m * E)
    j1 = scale - D

    if j1 < 0:
        if j1 < -ROUND_OFF * scale:
            raise UnboundStateError(f"D = {D} is too large for a bound state at E = {E}")

        j1 = 0.0

    return j1, D / 2


def energy_from_actions(s: ActionAngleState) -> float:
    return -s.params.m * s.params.k**2 / (2 * s.S**2)


def turning_points(s: ActionAngleState) -> tuple[float, float]:
    mk = s.params.m * s.params.k
    apocenter = s.S**2 / mk * (1 + math.sqrt(max(1 - (s.D / s.S) ** 2, 0.0)))

    # the product r_p r_a = (D S / m k)^2 avoids cancellation near circular orbits
    return (s.D * s.S / mk) ** 2 / apocenter, apocenter


def _clamped_arcsin(value: float, label: str) -> float:
    if abs(value) > 1 + ROUND_OFF:
        raise AngleDomainError(f"{label} arcsine argument {value:.12g} lies outside [-1, 1]")

    return math.asin(max(-1.0, min(1.0, value)))


def angle_coords(r: float, phi: float, s: ActionAngleState) -> tuple[float, float]:
    """
    The angles conjugate to (J1, J2) at radius r and polar angle phi. The
    radius must lie between the turning points.
    """

    mk = s.params.m * s.params.k
    S, D = s.S, s.D

    radicand = -(mk**2) * r**2 + 2 * mk * S**2 * r - D**2 * S**2

    if radicand < 0:
        if radicand < -ROUND_OFF * 2 * mk * S**2 * r:
            raise AngleDomainError(
                f"r = {r} lies outside the turning points {turning_points(s)}"
            )

        radicand = 0.0

    if not S**2 > D**2:
        raise AngleDomainError("angles are undefined on circular orbits (J1 = 0)")

    q_tilde = S * math.sqrt(S**2 - D**2)

    phi1 = -math.sqrt(radicand) / S**2 + _clamped_arcsin((mk * r - S**2) / q_tilde, "radial")

    inner = (1 - D**2 / (mk * r)) * S / math.sqrt(S**2 - D**2)
    phi2 = 2 * phi1 - 2 * _clamped_arcsin(inner, "angular") + phi - math.sin(2 * phi) / 2

    return phi1, phi2


def radial_momentum(r: float, s: ActionAngleState) -> float:
    r_p, r_a = turning_points(s)
    mk = s.params.m * s.params.k

    return mk * math.sqrt(max((r - r_p) * (r_a - r), 0.0)) / (s.S * r)


def _radial_integral(r: float, s: ActionAngleState) -> float:
    """Integral of p_r from the pericenter to r, with sqrt(r - r_p) as the quad weight."""

    r_p, r_a = turning_points(s)
    mk = s.params.m * s.params.k

    value, _ = quad(
        lambda x: mk * math.sqrt(max(r_a - x, 0.0)) / (s.S * x),
        r_p,
        r,
        weight="alg",
        wvar=(0.5, 0.0),
        epsabs=QUAD_TOL,
        epsrel=QUAD_TOL,
    )

    return float(value)


def radial_action(E: float, D: float, params: KeplerParams) -> float:
    """J1 as (1 / pi) times the integral of p_r between the turning points."""

    j1, j2 = actions_from_state(E, D, params)
    s = ActionAngleState(j1, j2, 0.0, 0.0, params)
    r_p, r_a = turning_points(s)
    mk = params.m * params.k

    value, _ = quad(
        lambda x: mk / (s.S * x),
        r_p,
        r_a,
        weight="alg",
        wvar=(0.5, 0.5),
        epsabs=QUAD_TOL,
        epsrel=QUAD_TOL,
    )

    return float(value) / math.pi


def angular_action(D: float) -> float:
    """J2 as (1 / 2 pi) times the integral of D sin^2 phi over a full turn."""

    value, _ = quad(lambda phi: D * math.sin(phi) ** 2, 0.0, 2 * math.pi, epsabs=QUAD_TOL)

    return float(value) / (2 * math.pi)


def generating_function(r: float, phi: float, s: ActionAngleState) -> float:
    """
    W(r, phi; J) with W = 0 at the pericenter and on phi = 0. Its J1 and J2
    derivatives are phi1 + pi / 2 and phi2.
    """

    angular = s.D * (phi / 2 - math.sin(2 * phi) / 4)

    return _radial_integral(r, s) + angular


def radial_angle_quadrature(r: float, s: ActionAngleState) -> float:
    """phi1 at r from the integral of its r-derivative, started at the pericenter."""

    r_p, r_a = turning_points(s)
    mk = s.params.m * s.params.k

    value, _ = quad(
        lambda x: mk * x / (s.S**2 * math.sqrt(r_a - x)),
        r_p,
        r,
        weight="alg",
        wvar=(-0.5, 0.0),
        epsabs=QUAD_TOL,
        epsrel=QUAD_TOL,
    )

    return float(value) - math.pi / 2


def _energies(S: Num, params: KeplerParams) -> list[Num]:
    c = params.m * params.k**2

    return [-c / (2 * S * S), -c / S, c * log(S), c * S]


def hierarchy_functions(params: KeplerParams) -> list[ScalarField]:
    def level(i: int) -> ScalarField:
        return lambda x: _energies(x[0] + 2 * x[1], params)[i]

    return [level(i) for i in range(4)]


def hierarchy(s: ActionAngleState) -> HierarchyBundle:
    c = s.params.m * s.params.k**2
    energies = tuple(value_of(h) for h in _energies(s.S, s.params))
    coefficients = tuple(c / s.S ** (3 - i) for i in range(4))

    return HierarchyBundle(H=energies, X=coefficients)  # type: ignore[arg-type]


def hierarchy_field(i: int, params: KeplerParams) -> VectorField:
    c = params.m * params.k**2

    return lambda x: c / (x[0] + 2 * x[1]) ** (3 - i) * DIRECTION


def aa_bivector(x: FloatArray) -> FloatArray:
    bivector = np.zeros((4, 4))

    for j, phi in zip(ACTIONS, ANGLES, strict=True):
        bivector[j, phi], bivector[phi, j] = 1.0, -1.0

    return bivector


def aa_symplectic_form(x: FloatArray) -> FloatArray:
    # sum dJ_h ^ dphi_h has the same matrix as the canonical bivector
    return aa_bivector(x)


def r_matrix(x: FloatArray) -> FloatArray:
    j1, j2 = float(x[0]), float(x[1])

    return np.array([[j1, j2], [4 * j2, j1]])


def r_inverse(x: FloatArray) -> FloatArray:
    j1, j2 = float(x[0]), float(x[1])
    det = j1**2 - 4 * j2**2

    if abs(det) <= ROUND_OFF * max(j1**2, 4 * j2**2, ROUND_OFF):
        raise SingularRecursionError(f"R is singular at J = ({j1}, {j2})")

    return np.array([[j1, -j2], [-4 * j2, j1]]) / det


def r_matrices(s: ActionAngleState) -> tuple[FloatArray, FloatArray]:
    return r_matrix(s.point), r_inverse(s.point)


def aa_bivector1(x: FloatArray) -> FloatArray:
    """{f, g}_1 = sum Rinv[h, k] (df/dJ_k dg/dphi_h - df/dphi_h dg/dJ_k)"""

    inverse = r_inverse(x)
    bivector = np.zeros((4, 4))

    for k, j in enumerate(ACTIONS):
        for h, phi in enumerate(ANGLES):
            bivector[j, phi] = inverse[h, k]
            bivector[phi, j] = -inverse[h, k]

    return bivector


def omega1(x: FloatArray) -> FloatArray:
    matrix = r_matrix(x)
    form = np.zeros((4, 4))

    for k, j in enumerate(ACTIONS):
        for h, phi in enumerate(ANGLES):
            form[j, phi] = matrix[k, h]
            form[phi, j] = -matrix[k, h]

    return form


AA_STRUCTURE = PoissonStructure(
    name="action-angle",
    dimension=4,
    bivector=aa_bivector,
    symplectic_form=aa_symplectic_form,
)

AA_STRUCTURE1 = PoissonStructure(
    name="action-angle-1",
    dimension=4,
    bivector=aa_bivector1,
    symplectic_form=omega1,
)


def recursion_tensor(x: FloatArray) -> FloatArray:
    """T = P1 o P^-1: Rinv on the angle block and its transpose on the action block."""

    inverse = r_inverse(x)
    tensor = np.zeros((4, 4))
    tensor[:2, :2] = inverse.T
    tensor[2:, 2:] = inverse

    return tensor


def recursion_aa(s: ActionAngleState) -> FloatArray:
    return recursion_tensor(s.point)


def eigen_invariants(s: ActionAngleState) -> tuple[float, float]:
    return s.J1 - 2 * s.J2, s.J1 + 2 * s.J2


def invariant_functions() -> tuple[ScalarField, ScalarField]:
    return (lambda x: x[0] - 2 * x[1], lambda x: x[0] + 2 * x[1])


def master_symmetry(s: ActionAngleState, j: Literal[1, 2, 3]) -> tuple[float, float]:
    """Components of Delta_j along (d/dJ1, d/dJ2)."""

    if j not in {1, 2, 3}:
        raise DomainError(f"master symmetries are indexed 1 to 3, got {j}")

    factor = 2 / (4 - j)

    return factor * (s.J1**2 + 4 * s.J2**2) / 2, factor * s.J1 * s.J2


def master_field(j: Literal[1, 2, 3], params: KeplerParams) -> VectorField:
    def field(x: FloatArray) -> FloatArray:
        state = ActionAngleState.at(x, params)
        l1, l2 = master_symmetry(state, j)

        return np.array([l1, l2, 0.0, 0.0])

    return field


def pairing_residuals(s: ActionAngleState) -> list[float]:
    """i_{X_i} omega = -dH_i and i_{X_i} omega1 = -dH_(i+1) for i = 0, 1, 2."""

    x = s.point
    bundle = hierarchy(s)
    levels = hierarchy_functions(s.params)
    residuals = []

    for i in range(3):
        field = bundle.field(i)

        for form, level in ((aa_bivector(x), levels[i]), (omega1(x), levels[i + 1])):
            contracted = interior_product(field, form)
            d_h = gradient(level, x)
            residuals.append(relative_residual(contracted + d_h, contracted, d_h))

        for structure, level in ((AA_STRUCTURE, levels[i]), (AA_STRUCTURE1, levels[i + 1])):
            derived = structure.hamiltonian_field(level, x)
            residuals.append(relative_residual(derived - field, derived, field))

    return residuals


def commutator_residuals(s: ActionAngleState) -> list[float]:
    x = s.point
    params = s.params
    fields = [hierarchy_field(i, params) for i in range(4)]
    residuals = []

    for h in range(4):
        for k in range(h + 1, 4):
            bracket = commutator(fields[h], fields[k], x)
            residuals.append(relative_residual(bracket, fields[h](x), fields[k](x)))

    for j in (1, 2, 3):
        bracket = commutator(fields[j - 1], master_field(j, params), x)  # type: ignore[arg-type]
        target = fields[j](x)
        residuals.append(relative_residual(bracket - target, bracket, target))

    # L_Delta omega = omega1, for the unscaled Delta = (3 / 2) Delta_1
    delta = master_field(1, params)
    lie = lie_derivative_2form(lambda y: 1.5 * delta(y), aa_symplectic_form, x)
    target_form = omega1(x)
    residuals.append(relative_residual(lie - target_form, lie, target_form))

    # Delta(H) = m k^2 / (2 S)
    shifted = float(1.5 * delta(x) @ gradient(hierarchy_functions(params)[0], x))
    expected = params.m * params.k**2 / (2 * s.S)
    residuals.append(relative_residual(shifted - expected, shifted, expected))

    return residuals


def commutator_checks(
    states: Sequence[ActionAngleState], tol: float, *, alpha: float = 1.0
) -> VerificationReport:
    collector = ResidualCollector()

    for state in states:
        collector.add(max(commutator_residuals(state)))

    return VerificationReport.build("master-symmetries", collector, alpha, tol)


def _derivative_scale(tensor: TensorField, x: FloatArray) -> float:
    return float(np.max(np.abs(central_jacobian(tensor, x))))


def compatibility_residuals(
    s: ActionAngleState,
    *,
    bivector1: TensorField = aa_bivector1,
    tensor: TensorField = recursion_tensor,
) -> list[float]:
    """
    Schouten brackets [P, P1] and [P1, P1] and the torsion of T, each relative
    to the products of tensor and first derivative they are assembled from.
    """

    x = s.point

    def scaled(value: FloatArray, first: TensorField, second: TensorField) -> float:
        scale = max(
            float(np.max(np.abs(first(x)))) * _derivative_scale(second, x),
            float(np.max(np.abs(second(x)))) * _derivative_scale(first, x),
        )

        return relative_residual(value, scale)

    return [
        scaled(schouten_bracket(aa_bivector, bivector1, x), aa_bivector, bivector1),
        scaled(schouten_bracket(bivector1, bivector1, x), bivector1, bivector1),
        scaled(torsion_tensor(tensor, x), tensor, tensor),
    ]


def compatibility_and_torsion(
    states: Sequence[ActionAngleState], tol: float, *, alpha: float = 1.0
) -> VerificationReport:
    collector = ResidualCollector()

    for state in states:
        collector.add(max(compatibility_residuals(state)))

    return VerificationReport.build("compatibility-and-torsion", collector, alpha, tol)


def spectrum_residuals(s: ActionAngleState) -> list[float]:
    """Eigenvalues of R and Rinv against J1 -+ 2 J2, and {I1, I2} = 0."""

    matrix, inverse = r_matrices(s)
    invariants = np.array(sorted(eigen_invariants(s)))

    spectrum = np.sort(np.linalg.eigvals(matrix).real)
    inverse_spectrum = np.sort(np.linalg.eigvals(inverse).real)
    reciprocals = np.sort(1 / invariants)

    first, second = invariant_functions()
    terms = AA_STRUCTURE.bracket_terms(first, second, s.point)

    return [
        relative_residual(matrix @ inverse - np.eye(2), matrix, inverse),
        relative_residual(spectrum - invariants, invariants),
        relative_residual(inverse_spectrum - reciprocals, reciprocals),
        relative_residual(float(np.sum(terms)), terms),
    ]


def aa_field(x: FloatArray, params: KeplerParams) -> FloatArray:
    return hierarchy_field(0, params)(x)


def integrate_action_flow(
    s: ActionAngleState,
    t_end: float,
    rel_tol: float,
    *,
    method: IntegrationMethod = "RK45",
) -> Trajectory:
    return integrate_flow(
        lambda _, y: aa_field(y, s.params), s.point, t_end, rel_tol, method=method
    )


def linear_flow(s: ActionAngleState, times: FloatArray) -> FloatArray:
    frequency = hierarchy(s).X[0]

    return s.point + np.outer(np.asarray(times, dtype=float), frequency * DIRECTION)


def actions_along(
    traj: Trajectory,
    source: Literal["equatorial", "cartesian"],
    params: KeplerParams,
    alpha: float = 1.0,
) -> FloatArray:
    """Rows (J1, J2, I1, I2) for every sample of a bound trajectory."""

    from .equatorial import eq_hamiltonian, theta
    from .kepler import kepler_hamiltonian
    from .symmetry import angular_momentum

    if source == "cartesian" and alpha != 1:
        raise DomainError("Cartesian trajectories map to actions at alpha = 1 only")

    rows = []

    for state in traj.states:
        if source == "equatorial":
            energy, separation = eq_hamiltonian(state, params), abs(theta(state))

        else:
            energy = value_of(kepler_hamiltonian(list(map(float, state)), params, 1.0))
            separation = float(np.linalg.norm(angular_momentum(state, 1.0)))

        j1, j2 = actions_from_state(energy, separation, params)
        rows.append([j1, j2, j1 - 2 * j2, j1 + 2 * j2])

    return np.asarray(rows, dtype=float)


ACTION_ANGLE_HEADER = ("t", "J1", "J2", "phi1", "phi2", "H", "I1", "I2")
ACTIONS_HEADER = ("t", "J1", "J2", "I1", "I2")


def action_angle_table(traj: Trajectory, params: KeplerParams) -> FloatArray:
    rows = []

    for t, x in zip(traj.times, traj.states, strict=True):
        state = ActionAngleState.at(x, params)

        rows.append([t, *x, energy_from_actions(state), *eigen_invariants(state)])

    return np.asarray(rows, dtype=float)


def linear_flow_report(
    traj: Trajectory, s: ActionAngleState, tol: float = 1e-7
) -> VerificationReport:
    """Integrated action-angle flow against the closed-form linear motion of the angles."""

    collector = ResidualCollector()
    expected = linear_flow(s, traj.times)
    scale = max(float(np.max(np.abs(expected))), 1.0)

    collector.extend(np.max(np.abs(traj.states - expected), axis=1) / scale)

    return VerificationReport.build("linear-flow", collector, 1.0, tol)


def actions_table(traj: Trajectory, rows: FloatArray) -> FloatArray:
    return np.column_stack((traj.times, rows))


def action_drifts(rows: FloatArray) -> dict[str, float]:
    """Largest change of J1, J2, I1 and I2 from their first value, relative to S."""

    scale = max(float(rows[0, 3]), ROUND_OFF)
    change = np.max(np.abs(rows - rows[0]), axis=0) / scale

    return dict(zip(("J1", "J2", "I1", "I2"), map(float, change), strict=True))
