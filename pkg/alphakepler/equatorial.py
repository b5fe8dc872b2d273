"""
The reduced system on equatorial orbits, in coordinates (r, pr, phi, pphi).

Complex quantities (M, N, B, Omega and the fields built from them) are carried
as pairs of real objects, and every complex identity is checked as two real
ones.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .conformable import cos, gradient, sin, value_of
from .error import EquatorialDomainError
from .kepler import HyperplaneGuard, IntegrationMethod, KeplerParams, Trajectory, integrate_flow
from .poisson import (
    PoissonStructure,
    commutator,
    compose,
    interior_product,
    lie_derivative_2form,
    lie_derivative_tensor,
)
from .report import ResidualCollector, VerificationReport, relative_residual
from .types import FloatArray, Num, ScalarField, VectorField

R, PR, PHI, PPHI = range(4)

PINNED_POINT = np.array([1.3, 0.2, 1.1, 0.8])

SINE_FLOOR = 1e-12

# integration stops once |sin(phi)| drops below this fraction of its start, as
# Theta = pphi / sin(phi)^2 loses its digits on the polar axis
SINE_GUARD_FRACTION = 0.1


@dataclass(frozen=True)
class ComplexPair:
    M: complex
    N: complex


@dataclass(frozen=True)
class ReducedForm:
    matrix: FloatArray
    label: Literal["omega", "Omega1", "Omega2"]


def check_domain(e: Sequence[float] | FloatArray) -> FloatArray:
    point = np.asarray(e, dtype=float)

    if point.shape != (4,):
        raise EquatorialDomainError(f"an equatorial point has 4 coordinates, got {point.size}")

    if not point[R] > 0:
        raise EquatorialDomainError(f"r must be positive, got {point[R]}")

    if abs(math.sin(point[PHI])) < SINE_FLOOR:
        raise EquatorialDomainError(f"sin(phi) vanishes at phi = {point[PHI]}")

    return point


def _hamiltonian(e: Sequence[Num], params: KeplerParams) -> Num:
    r, pr, phi, pphi = e
    s = sin(phi)

    return pr * pr / (2 * params.m) + pphi * pphi / (2 * params.m * r * r * s**4) - params.k / r


def _theta(e: Sequence[Num]) -> Num:
    return e[PPHI] / sin(e[PHI]) ** 2


def _gamma(e: Sequence[Num], params: KeplerParams) -> Num:
    r, _, phi, pphi = e

    return pphi / (params.m * r * r * sin(phi) ** 2)


def _m_parts(e: Sequence[Num], params: KeplerParams) -> tuple[Num, Num]:
    r, pr, phi, pphi = e
    s = sin(phi)

    return pr * pphi / (params.m * s * s), params.k - pphi * pphi / (params.m * r * s**4)


def _b_parts(e: Sequence[Num], params: KeplerParams) -> tuple[Num, Num]:
    m1, m2 = _m_parts(e, params)
    c, s = cos(e[PHI]), sin(e[PHI])

    return m1 * c + m2 * s, m2 * c - m1 * s


def eq_hamiltonian(e: Sequence[float] | FloatArray, params: KeplerParams) -> float:
    return value_of(_hamiltonian(list(check_domain(e)), params))


def theta(e: Sequence[float] | FloatArray) -> float:
    return value_of(_theta(list(check_domain(e))))


def gamma(e: Sequence[float] | FloatArray, params: KeplerParams) -> float:
    return value_of(_gamma(list(check_domain(e)), params))


def mn_complex(e: Sequence[float] | FloatArray, params: KeplerParams) -> ComplexPair:
    point = check_domain(e)
    m1, m2 = _m_parts(list(point), params)

    return ComplexPair(complex(m1, m2), complex(math.cos(point[PHI]), math.sin(point[PHI])))


def b_invariants(e: Sequence[float] | FloatArray, params: KeplerParams) -> tuple[float, float]:
    b_s, b_b = _b_parts(list(check_domain(e)), params)

    return value_of(b_s), value_of(b_b)


def hamiltonian_function(params: KeplerParams) -> ScalarField:
    return lambda e: _hamiltonian(e, params)


def theta_function() -> ScalarField:
    return _theta


def gamma_function(params: KeplerParams) -> ScalarField:
    return lambda e: _gamma(e, params)


def m_functions(params: KeplerParams) -> tuple[ScalarField, ScalarField]:
    return (lambda e: _m_parts(e, params)[0], lambda e: _m_parts(e, params)[1])


def n_functions() -> tuple[ScalarField, ScalarField]:
    return (lambda e: cos(e[PHI]), lambda e: sin(e[PHI]))


def b_functions(params: KeplerParams) -> tuple[ScalarField, ScalarField]:
    return (lambda e: _b_parts(e, params)[0], lambda e: _b_parts(e, params)[1])


def eq_bivector(e: FloatArray) -> FloatArray:
    s2 = math.sin(check_domain(e)[PHI]) ** 2

    bivector = np.zeros((4, 4))
    bivector[PR, R], bivector[R, PR] = 1.0, -1.0
    bivector[PPHI, PHI], bivector[PHI, PPHI] = s2, -s2

    return bivector


def eq_symplectic_form(e: FloatArray) -> FloatArray:
    s2 = math.sin(check_domain(e)[PHI]) ** 2

    form = np.zeros((4, 4))
    form[PR, R], form[R, PR] = 1.0, -1.0
    form[PPHI, PHI], form[PHI, PPHI] = 1 / s2, -1 / s2

    return form


EQUATORIAL = PoissonStructure(
    name="equatorial",
    dimension=4,
    bivector=eq_bivector,
    symplectic_form=eq_symplectic_form,
)


def eq_bracket(f: ScalarField, g: ScalarField, e: Sequence[float] | FloatArray) -> float:
    return EQUATORIAL.bracket(f, g, check_domain(e))


def eq_field(e: Sequence[float] | FloatArray, params: KeplerParams) -> FloatArray:
    r, pr, phi, pphi = check_domain(e)
    s, c = math.sin(phi), math.cos(phi)
    m, k = params.m, params.k

    return np.array([
        pr / m,
        pphi**2 / (m * r**3 * s**4) - k / r**2,
        pphi / (m * r**2 * s**2),
        2 * pphi**2 * c / (m * r**2 * s**3),
    ])


def theta_field(e: Sequence[float] | FloatArray) -> FloatArray:
    _, _, phi, pphi = check_domain(e)

    return np.array([0.0, 0.0, 1.0, 2 * pphi / math.tan(phi)])


def gamma_field(e: Sequence[float] | FloatArray, params: KeplerParams) -> FloatArray:
    return EQUATORIAL.hamiltonian_field(gamma_function(params), check_domain(e))


def _wedge_dphi(coefficients: Sequence[float]) -> FloatArray:
    """Matrix of (a dr + b dpr + c dpphi) ^ dphi."""

    matrix = np.zeros((4, 4))

    for index, value in zip((R, PR, PPHI), coefficients, strict=True):
        matrix[index, PHI] = value
        matrix[PHI, index] = -value

    return matrix


def omega_forms(
    e: Sequence[float] | FloatArray, params: KeplerParams
) -> tuple[ReducedForm, ReducedForm]:
    r, pr, phi, pphi = check_domain(e)
    s, c = math.sin(phi), math.cos(phi)
    m = params.m

    first = _wedge_dphi([
        pphi**2 * c / (m * r**2 * s**4),
        -pphi / (m * s),
        -pr / (m * s) - 2 * pphi * c / (m * r * s**4),
    ])
    second = _wedge_dphi([
        -(pphi**2) / (m * r**2 * s**3),
        -pphi * c / (m * s**2),
        -pr * c / (m * s**2) + 2 * pphi / (m * r * s**3),
    ])

    return ReducedForm(first, "Omega1"), ReducedForm(second, "Omega2")


def wedge_dm_dnstar(
    e: Sequence[float] | FloatArray, params: KeplerParams
) -> tuple[FloatArray, FloatArray]:
    """
    Real and imaginary parts of dM ^ dN*, assembled from jet differentials of
    M1, M2, N1 and N2 = sin(phi) (N* = N1 - i N2).
    """

    point = check_domain(e)
    m1, m2 = m_functions(params)
    n1, n2 = n_functions()

    d_m1, d_m2 = gradient(m1, point), gradient(m2, point)
    d_n1, d_n2 = gradient(n1, point), -gradient(n2, point)

    def wedge(a: FloatArray, b: FloatArray) -> FloatArray:
        return np.outer(a, b) - np.outer(b, a)

    return wedge(d_m1, d_n1) - wedge(d_m2, d_n2), wedge(d_m1, d_n2) + wedge(d_m2, d_n1)


def recursion_matrix(
    e: Sequence[float] | FloatArray, params: KeplerParams, which: Literal[1, 2]
) -> FloatArray:
    """T = omega^-1 o Omega_which as a (1,1) tensor."""

    point = check_domain(e)
    form = omega_forms(point, params)[which - 1].matrix

    return eq_bivector(point) @ form


def hamiltonian_vector_field(params: KeplerParams) -> VectorField:
    return lambda e: eq_field(e, params)


def recursion_invariance_norm(
    e: Sequence[float] | FloatArray, params: KeplerParams, which: Literal[1, 2]
) -> float:
    change = lie_derivative_tensor(
        hamiltonian_vector_field(params),
        lambda y: recursion_matrix(y, params, which),
        check_domain(e),
    )

    return float(np.linalg.norm(change))


def tilde_fields(params: KeplerParams) -> dict[str, tuple[VectorField, VectorField]]:
    """
    Real and imaginary parts of X1 = N* X_M and X2 = M X_N*, keyed by name.
    """

    m1, m2 = m_functions(params)
    n1, n2 = n_functions()

    def fields(e: FloatArray) -> dict[str, FloatArray]:
        point = check_domain(e)
        c, s = math.cos(point[PHI]), math.sin(point[PHI])
        mr, mi = (value_of(f(list(point))) for f in (m1, m2))

        x_m1, x_m2 = (EQUATORIAL.hamiltonian_field(f, point) for f in (m1, m2))
        x_n1, x_n2 = (EQUATORIAL.hamiltonian_field(f, point) for f in (n1, n2))

        return {
            "x1_real": c * x_m1 + s * x_m2,
            "x1_imag": c * x_m2 - s * x_m1,
            "x2_real": mr * x_n1 + mi * x_n2,
            "x2_imag": mi * x_n1 - mr * x_n2,
        }

    def part(name: str) -> VectorField:
        return lambda e: fields(e)[name]

    return {
        "x1": (part("x1_real"), part("x1_imag")),
        "x2": (part("x2_real"), part("x2_imag")),
    }


def tilde_lie_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    """L_{X1} omega = Omega and L_{X2} omega = -Omega, both parts."""

    point = check_domain(e)
    first, second = omega_forms(point, params)
    fields = tilde_fields(params)
    residuals = []

    for name, sign in (("x1", 1.0), ("x2", -1.0)):
        for field, target in zip(fields[name], (first.matrix, second.matrix), strict=True):
            lie = lie_derivative_2form(field, eq_symplectic_form, point)
            residuals.append(relative_residual(lie - sign * target, lie, target))

    return residuals


def tilde_commutator_residuals(
    e: Sequence[float] | FloatArray, params: KeplerParams
) -> list[float]:
    """[X_H, X1] = i B X_gamma and [X_H, X2] = -i B X_gamma, both parts."""

    point = check_domain(e)
    b_s, b_b = b_invariants(point, params)
    x_gamma = gamma_field(point, params)
    x_h = hamiltonian_vector_field(params)
    fields = tilde_fields(params)

    # i B = -B_b + i B_s
    targets = {
        "x1": (-b_b * x_gamma, b_s * x_gamma),
        "x2": (b_b * x_gamma, -b_s * x_gamma),
    }
    residuals = []

    for name, parts in fields.items():
        for field, target in zip(parts, targets[name], strict=True):
            bracket = commutator(x_h, field, point)
            residuals.append(relative_residual(bracket - target, bracket, target))

    return residuals


def noether_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    point = check_domain(e)
    x_theta = EQUATORIAL.field_of(theta_function())

    lie = lie_derivative_2form(x_theta, eq_symplectic_form, point)
    flow = commutator(hamiltonian_vector_field(params), x_theta, point)

    h_terms = EQUATORIAL.bracket_terms(theta_function(), hamiltonian_function(params), point)

    return [
        relative_residual(lie, eq_symplectic_form(point)),
        relative_residual(float(np.sum(h_terms)), h_terms),
        relative_residual(flow, x_theta(point), eq_field(point, params)),
    ]


def rotation_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    """{H, M1} = -g M2, {H, M2} = g M1 and the same rotation for N."""

    point = check_domain(e)
    energy = hamiltonian_function(params)
    g = gamma(point, params)
    m1, m2 = m_functions(params)
    n1, n2 = n_functions()

    residuals = []

    for first, second in ((m1, m2), (n1, n2)):
        a, b = value_of(first(list(point))), value_of(second(list(point)))

        for field, expected in ((first, -g * b), (second, g * a)):
            terms = EQUATORIAL.bracket_terms(energy, field, point)
            value = float(np.sum(terms))
            residuals.append(relative_residual(value - expected, terms, expected))

    return residuals


def first_integral_residuals(
    e: Sequence[float] | FloatArray, params: KeplerParams
) -> list[float]:
    point = check_domain(e)
    energy = hamiltonian_function(params)

    residuals = []

    for field in (theta_function(), *b_functions(params)):
        terms = EQUATORIAL.bracket_terms(energy, field, point)
        residuals.append(relative_residual(float(np.sum(terms)), terms))

    return residuals


def field_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    """The closed-form X_H and X_Theta against the bracket, and i_{X_H} omega = -dH."""

    point = check_domain(e)
    energy = hamiltonian_function(params)

    x_h = eq_field(point, params)
    derived = EQUATORIAL.hamiltonian_field(energy, point)
    d_h = gradient(energy, point)
    contracted = interior_product(x_h, eq_symplectic_form(point))

    x_theta = theta_field(point)
    derived_theta = EQUATORIAL.hamiltonian_field(theta_function(), point)

    return [
        relative_residual(x_h - derived, x_h, derived),
        relative_residual(contracted + d_h, contracted, d_h),
        relative_residual(x_theta - derived_theta, x_theta, derived_theta),
    ]


def quasi_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    point = check_domain(e)
    x_h = eq_field(point, params)
    g = gamma(point, params)
    b_s, b_b = b_functions(params)
    first, second = omega_forms(point, params)

    one = interior_product(x_h, first.matrix)
    two = interior_product(x_h, second.matrix)
    d_bb = g * gradient(b_b, point)
    d_bs = g * gradient(b_s, point)

    return [
        relative_residual(one + d_bb, one, d_bb),
        relative_residual(two - d_bs, two, d_bs),
    ]


def quasi_check(
    points: Sequence[FloatArray], params: KeplerParams, tol: float, *, alpha: float = 1.0
) -> VerificationReport:
    collector = ResidualCollector()

    for point in points:
        with collector.point():
            collector.add(max(quasi_residuals(point, params)))

    return VerificationReport.build("quasi-bi-hamiltonian", collector, alpha, tol)


def reconstruction_residuals(
    e: Sequence[float] | FloatArray, params: KeplerParams
) -> list[float]:
    first, second = omega_forms(e, params)
    real, imag = wedge_dm_dnstar(e, params)

    return [
        relative_residual(real - first.matrix, real, first.matrix),
        relative_residual(imag - second.matrix, imag, second.matrix),
    ]


def recursion_residuals(e: Sequence[float] | FloatArray, params: KeplerParams) -> list[float]:
    """omega o T_i = Omega_i for both recursion operators."""

    point = check_domain(e)
    form = eq_symplectic_form(point)
    residuals = []

    for which, target in zip((1, 2), omega_forms(point, params), strict=True):
        composed = compose(form, recursion_matrix(point, params, which))  # type: ignore[arg-type]
        residuals.append(relative_residual(composed - target.matrix, target.matrix))

    return residuals


class SineGuard(HyperplaneGuard):
    def __call__(self, t: float, y: FloatArray) -> float:
        return float(abs(math.sin(y[self.index])) - self.threshold)


def integrate_equatorial(
    e0: Sequence[float] | FloatArray,
    params: KeplerParams,
    t_end: float,
    rel_tol: float,
    *,
    method: IntegrationMethod = "RK45",
) -> Trajectory:
    start = check_domain(e0)
    guard = SineGuard(PHI, SINE_GUARD_FRACTION * abs(math.sin(start[PHI])))

    return integrate_flow(
        lambda _, y: eq_field(y, params),
        start,
        t_end,
        rel_tol,
        method=method,
        guards=[guard],
    )


def equatorial_invariants(e: FloatArray, params: KeplerParams) -> dict[str, float]:
    b_s, b_b = b_invariants(e, params)

    return {
        "H": eq_hamiltonian(e, params),
        "Theta": theta(e),
        "Bs": b_s,
        "Bb": b_b,
    }


def equatorial_drifts(traj: Trajectory, params: KeplerParams) -> dict[str, FloatArray]:
    initial = equatorial_invariants(traj.states[0], params)
    scales = {
        "H": max(abs(initial["H"]), params.k / traj.states[0][R]),
        "Theta": max(abs(initial["Theta"]), SINE_FLOOR),
        "Bs": max(math.hypot(initial["Bs"], initial["Bb"]), params.k),
        "Bb": max(math.hypot(initial["Bs"], initial["Bb"]), params.k),
    }

    drifts: dict[str, list[float]] = {name: [] for name in initial}

    for state in traj.states:
        for name, value in equatorial_invariants(state, params).items():
            drifts[name].append(abs(value - initial[name]) / scales[name])

    return {name: np.asarray(values) for name, values in drifts.items()}


def equatorial_conservation_report(
    traj: Trajectory, params: KeplerParams, tol: float = 1e-7
) -> VerificationReport:
    collector = ResidualCollector()
    drifts = equatorial_drifts(traj, params)

    collector.extend(np.max(np.vstack(list(drifts.values())), axis=0))

    return VerificationReport.build("equatorial-conservation", collector, 1.0, tol)


EQUATORIAL_HEADER = ("t", "r", "pr", "phi", "pphi", "H", "Theta", "Bs", "Bb")


def equatorial_table(traj: Trajectory, params: KeplerParams) -> FloatArray:
    rows = [
        [t, *state, *equatorial_invariants(state, params).values()]
        for t, state in zip(traj.times, traj.states, strict=True)
    ]

    return np.asarray(rows, dtype=float)
