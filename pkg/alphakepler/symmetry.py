from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .conformable import check_alpha, spow, sqrt, value_of
from .error import DomainError, ZeroEnergyError
from .kepler import KeplerParams, kepler_hamiltonian, r_alpha
from .poisson import PoissonStructure, cartesian_structure
from .report import ResidualCollector, VerificationReport, relative_residual
from .types import FloatArray, Num, ScalarField

ZERO_ENERGY_BAND = 1e-12

LEVI_CIVITA = np.zeros((3, 3, 3))
LEVI_CIVITA[0, 1, 2] = LEVI_CIVITA[1, 2, 0] = LEVI_CIVITA[2, 0, 1] = 1.0
LEVI_CIVITA[0, 2, 1] = LEVI_CIVITA[2, 1, 0] = LEVI_CIVITA[1, 0, 2] = -1.0


class Branch(str, Enum):
    MINUS = "minus"
    PLUS = "plus"


@dataclass(frozen=True)
class SymmetryVectors:
    L: FloatArray
    A: FloatArray
    Gamma: FloatArray
    branch: Branch


@dataclass(frozen=True)
class GeneratorMatrix:
    M: FloatArray
    algebra: str

    def __post_init__(self) -> None:
        if self.algebra not in {"so4", "so13"}:
            raise ValueError(f'alphakepler: unknown algebra "{self.algebra}"')


def cross(a: Sequence[Num], b: Sequence[Num]) -> list[Num]:
    return [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]


def conformable_image(v: Sequence[Num], alpha: float) -> list[Num]:
    return [alpha * spow(c, alpha) for c in v]


def _angular_momentum(x: Sequence[Num], alpha: float) -> list[Num]:
    return cross(conformable_image(x[:3], alpha), conformable_image(x[3:], alpha))


def _lrl_vector(x: Sequence[Num], params: KeplerParams, alpha: float) -> list[Num]:
    image_q = conformable_image(x[:3], alpha)
    image_p = conformable_image(x[3:], alpha)
    r = r_alpha(x[:3], alpha)

    return [
        c - params.m * params.k * qi / r
        for c, qi in zip(cross(image_p, cross(image_q, image_p)), image_q, strict=True)
    ]


def _as_floats(x: Sequence[float] | FloatArray) -> list[float]:
    return [float(c) for c in x]


def angular_momentum(x: Sequence[float] | FloatArray, alpha: float) -> FloatArray:
    check_alpha(alpha)

    return np.array([value_of(c) for c in _angular_momentum(_as_floats(x), alpha)])


def lrl_vector(x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float) -> FloatArray:
    return np.array([value_of(c) for c in _lrl_vector(_as_floats(x), params, alpha)])


def energy_branch(energy: float) -> Branch:
    if abs(energy) < ZERO_ENERGY_BAND:
        raise ZeroEnergyError(f"point lies on the zero-energy boundary (H = {energy:.3e})")

    return Branch.MINUS if energy < 0 else Branch.PLUS


def _scaled_rlp(x: Sequence[Num], params: KeplerParams, alpha: float) -> list[Num]:
    energy = kepler_hamiltonian(x, params, alpha)
    branch = energy_branch(value_of(energy))

    radicand = -2 * params.m * energy if branch is Branch.MINUS else 2 * params.m * energy
    scale = sqrt(radicand)

    return [-c / scale for c in _lrl_vector(x, params, alpha)]


def scaled_rlp(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> tuple[FloatArray, Branch]:
    floats = _as_floats(x)
    branch = energy_branch(value_of(kepler_hamiltonian(floats, params, alpha)))

    return np.array([value_of(c) for c in _scaled_rlp(floats, params, alpha)]), branch


def symmetry_vectors(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> SymmetryVectors:
    gamma, branch = scaled_rlp(x, params, alpha)

    return SymmetryVectors(
        L=angular_momentum(x, alpha), A=lrl_vector(x, params, alpha), Gamma=gamma, branch=branch
    )


def primed_angular_momentum_fields(alpha: float) -> list[ScalarField]:
    def component(i: int) -> ScalarField:
        return lambda x: -_angular_momentum(x, alpha)[i]

    return [component(i) for i in range(3)]


def lrl_fields(params: KeplerParams, alpha: float) -> list[ScalarField]:
    def component(i: int) -> ScalarField:
        return lambda x: _lrl_vector(x, params, alpha)[i]

    return [component(i) for i in range(3)]


def scaled_rlp_fields(params: KeplerParams, alpha: float) -> list[ScalarField]:
    def component(i: int) -> ScalarField:
        return lambda x: _scaled_rlp(x, params, alpha)[i]

    return [component(i) for i in range(3)]


def hamiltonian_field_of(params: KeplerParams, alpha: float) -> ScalarField:
    return lambda x: kepler_hamiltonian(x, params, alpha)


def _structure_constant_residual(
    structure: PoissonStructure,
    left: ScalarField,
    right: ScalarField,
    expected: float,
    x: FloatArray,
) -> float:
    terms = structure.bracket_terms(left, right, x)
    half = terms.size // 2
    value = float(np.sum(terms[:half] + terms[half:]))

    return relative_residual(value - expected, terms, expected)


def _algebra_residuals(
    structure: PoissonStructure,
    first: list[ScalarField],
    second: list[ScalarField],
    values: FloatArray,
    sign: float,
    alpha: float,
    x: FloatArray,
) -> list[float]:
    """{first_i, second_j} = sign * eps_ijh alpha^2 values_h for every (i, j)"""

    expected = sign * alpha**2 * np.einsum("ijh,h->ij", LEVI_CIVITA, values)

    return [
        _structure_constant_residual(structure, first[i], second[j], expected[i, j], x)
        for i in range(3)
        for j in range(3)
    ]


def so3_report(
    points: Sequence[FloatArray], alpha: float, tol: float
) -> VerificationReport:
    structure = cartesian_structure(alpha)
    generators = primed_angular_momentum_fields(alpha)
    collector = ResidualCollector()

    for point in points:
        with collector.point():
            x = np.asarray(point, dtype=float)
            primed = -angular_momentum(x, alpha)

            collector.add(
                max(_algebra_residuals(structure, generators, generators, primed, 1, alpha, x))
            )

    return VerificationReport.build("so3-structure", collector, alpha, tol)


def so4_so13_report(
    points: Sequence[FloatArray],
    params: KeplerParams,
    alpha: float,
    tol: float,
    *,
    branch: Branch | None = None,
) -> VerificationReport:
    """
    Closes L' with the scaled vector on each point's energy branch: the
    Gamma-Gamma bracket is +eps L' below zero energy and -eps L' above it.
    Passing `branch` rejects points from the other family.
    """

    structure = cartesian_structure(alpha)
    rotations = primed_angular_momentum_fields(alpha)
    boosts = scaled_rlp_fields(params, alpha)
    collector = ResidualCollector()

    for point in points:
        with collector.point():
            x = np.asarray(point, dtype=float)
            gamma, found = scaled_rlp(x, params, alpha)

            if branch is not None and found is not branch:
                raise DomainError(f"point on the {found.value} branch, expected {branch.value}")

            primed = -angular_momentum(x, alpha)
            sign = 1.0 if found is Branch.MINUS else -1.0

            residuals = [
                *_algebra_residuals(structure, rotations, rotations, primed, 1, alpha, x),
                *_algebra_residuals(structure, rotations, boosts, gamma, 1, alpha, x),
                *_algebra_residuals(structure, boosts, boosts, primed, sign, alpha, x),
            ]

            collector.add(max(residuals))

    name = {None: "so4-so13-structure", Branch.MINUS: "so4-structure"}.get(
        branch, "so13-structure"
    )

    return VerificationReport.build(name, collector, alpha, tol)


def first_integral_residuals(
    x: FloatArray, params: KeplerParams, alpha: float
) -> list[float]:
    structure = cartesian_structure(alpha)
    energy = hamiltonian_field_of(params, alpha)

    fields = [
        *primed_angular_momentum_fields(alpha),
        *lrl_fields(params, alpha),
        *scaled_rlp_fields(params, alpha),
    ]

    return [
        _structure_constant_residual(structure, energy, field, 0.0, x) for field in fields
    ]


def generator_matrix(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> GeneratorMatrix:
    gamma, branch = scaled_rlp(x, params, alpha)
    primed = -angular_momentum(x, alpha)

    matrix = np.zeros((4, 4))
    matrix[:3, :3] = alpha**2 * np.einsum("hji,i->hj", LEVI_CIVITA, primed)

    if branch is Branch.MINUS:
        matrix[:3, 3] = alpha**2 * gamma
        matrix[3, :3] = -(alpha**2) * gamma

        return GeneratorMatrix(matrix, "so4")

    matrix[:3, 3] = -(alpha**2) * gamma
    matrix[3, :3] = -(alpha**2) * gamma

    return GeneratorMatrix(matrix, "so13")


def casimir1(
    x: Sequence[float] | FloatArray, params: KeplerParams, alpha: float
) -> tuple[float, float]:
    """
    The first Casimir twice over: as the sum of squared generator entries and
    as 2 alpha^4 (|L'|^2 + |Gamma|^2).
    """

    generators = generator_matrix(x, params, alpha)
    gamma, _ = scaled_rlp(x, params, alpha)
    primed = -angular_momentum(x, alpha)

    from_matrix = float(np.sum(generators.M * generators.M))
    from_vectors = float(2 * alpha**4 * (primed @ primed + gamma @ gamma))

    return from_matrix, from_vectors
