"""
Pointwise differential geometry: Poisson structures and their brackets, plus
the finite-difference machinery (Lie derivatives, commutators, torsion and
Schouten brackets) used for identities that need a second derivative.

Matrix conventions, shared by every structure in the package:

* a bivector is stored as P[i, j] = P^{ij}, and {f, g} = P^{ij} df_i dg_j
* a 2-form is stored as W[i, j], the coefficient of dx^i ^ dx^j, with
  W[j, i] = -W[i, j]
* a (1,1) tensor is stored as T[i, j] = T^i_j
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .conformable import abs_power, check_alpha, gradient, value_of
from .report import ResidualCollector, VerificationReport, relative_residual
from .types import FloatArray, Num, ScalarField, TensorField, VectorField

FD_STEP = 1e-5


@dataclass(frozen=True)
class PoissonStructure:
    name: str
    dimension: int
    bivector: TensorField
    symplectic_form: TensorField | None = None

    def bracket_terms(self, f: ScalarField, g: ScalarField, x: FloatArray) -> FloatArray:
        """
        The individual products entering {f, g}. Pairing the (i, j) and (j, i)
        entries keeps swapping f and g an exact sign flip.
        """

        upper = np.triu_indices(self.dimension, 1)
        weights = self.bivector(x)[upper]
        df = field_gradient(f, x)
        dg = field_gradient(g, x)

        forward = weights * (df[upper[0]] * dg[upper[1]])
        backward = weights * (df[upper[1]] * dg[upper[0]])

        return np.concatenate([forward, -backward])

    def bracket(self, f: ScalarField, g: ScalarField, x: FloatArray) -> float:
        terms = self.bracket_terms(f, g, x)
        half = terms.size // 2

        return float(np.sum(terms[:half] + terms[half:]))

    def hamiltonian_field(self, f: ScalarField, x: FloatArray) -> FloatArray:
        return self.bivector(x).T @ field_gradient(f, x)

    def field_of(self, f: ScalarField) -> VectorField:
        return lambda x: self.hamiltonian_field(f, x)


@dataclass(frozen=True)
class BracketField:
    """
    The scalar field x -> {f, g}(x). It is evaluated at float points only, so
    its own gradient comes from central differences.
    """

    f: ScalarField
    g: ScalarField
    structure: PoissonStructure

    def __call__(self, x: Sequence[Num]) -> float:
        return self.structure.bracket(self.f, self.g, np.asarray(x, dtype=float))


def field_gradient(f: ScalarField, x: FloatArray) -> FloatArray:
    if isinstance(f, BracketField):
        return central_jacobian(lambda y: np.asarray(f(y)), x)

    return gradient(f, x)


def finite_steps(x: FloatArray) -> FloatArray:
    return FD_STEP * np.maximum(np.abs(x), 1.0)


def central_jacobian(fn: Callable[[FloatArray], npt.ArrayLike], x: npt.ArrayLike) -> FloatArray:
    """
    Five point central differences of an array valued map. The derivative with
    respect to x_l is stored along the trailing axis.
    """

    point = np.asarray(x, dtype=float)
    columns = []

    def shifted(i: int, offset: float) -> FloatArray:
        moved = point.copy()
        moved[i] += offset

        return np.asarray(fn(moved), dtype=float)

    for i, h in enumerate(finite_steps(point)):
        near = shifted(i, h) - shifted(i, -h)
        far = shifted(i, 2 * h) - shifted(i, -2 * h)

        columns.append((8 * near - far) / (12 * h))

    return np.stack(columns, axis=-1)


def bracket_weights(x: FloatArray, alpha: float) -> FloatArray:
    check_alpha(alpha)

    q, p = np.asarray(x[:3], dtype=float), np.asarray(x[3:], dtype=float)

    return alpha**-2 * abs_power(p, 1 - alpha) * abs_power(q, 1 - alpha)


def cartesian_bivector(x: FloatArray, alpha: float) -> FloatArray:
    w = bracket_weights(x, alpha)
    bivector = np.zeros((6, 6))

    for i in range(3):
        bivector[3 + i, i] = w[i]
        bivector[i, 3 + i] = -w[i]

    return bivector


def cartesian_symplectic_form(x: FloatArray, alpha: float) -> FloatArray:
    w = bracket_weights(x, alpha)
    form = np.zeros((6, 6))

    for i in range(3):
        form[3 + i, i] = 1 / w[i]
        form[i, 3 + i] = -1 / w[i]

    return form


def cartesian_structure(alpha: float) -> PoissonStructure:
    check_alpha(alpha)

    return PoissonStructure(
        name=f"cartesian(alpha={alpha:g})",
        dimension=6,
        bivector=lambda x: cartesian_bivector(x, alpha),
        symplectic_form=lambda x: cartesian_symplectic_form(x, alpha),
    )


def poisson_bracket(f: ScalarField, g: ScalarField, x: FloatArray, alpha: float) -> float:
    return cartesian_structure(alpha).bracket(f, g, np.asarray(x, dtype=float))


def hamiltonian_field(f: ScalarField, x: FloatArray, alpha: float) -> FloatArray:
    return cartesian_structure(alpha).hamiltonian_field(f, np.asarray(x, dtype=float))


def coordinate(index: int) -> ScalarField:
    return lambda x: x[index]


def bracket_axiom_report(
    fields: tuple[ScalarField, ScalarField, ScalarField],
    points: Sequence[FloatArray],
    structure: PoissonStructure,
    tol: float,
    *,
    alpha: float = 1.0,
) -> VerificationReport:
    f, g, h = fields
    collector = ResidualCollector()

    def product(a: ScalarField, b: ScalarField) -> ScalarField:
        return lambda y: a(y) * b(y)

    for point in points:
        with collector.point():
            x = np.asarray(point, dtype=float)

            fg = structure.bracket(f, g, x)
            gf = structure.bracket(g, f, x)
            antisymmetry = relative_residual(fg + gf, fg, gf)

            fh = structure.bracket(f, h, x)
            g_x, h_x = value_of(g(x)), value_of(h(x))
            leibniz = relative_residual(
                structure.bracket(f, product(g, h), x) - g_x * fh - h_x * fg,
                structure.bracket_terms(f, product(g, h), x),
                g_x * structure.bracket_terms(f, h, x),
                h_x * structure.bracket_terms(f, g, x),
            )

            cyclic = [
                structure.bracket_terms(f, BracketField(g, h, structure), x),
                structure.bracket_terms(g, BracketField(h, f, structure), x),
                structure.bracket_terms(h, BracketField(f, g, structure), x),
            ]
            jacobi = relative_residual(sum(float(np.sum(t)) for t in cyclic), *cyclic)

            collector.add(max(antisymmetry, leibniz, jacobi))

    return VerificationReport.build("bracket-axioms", collector, alpha, tol)


def interior_product(vector: npt.ArrayLike, form: npt.ArrayLike) -> FloatArray:
    """(i_X W)_nu = sum_mu X^mu W[mu, nu]"""

    x = np.asarray(vector, dtype=float)
    w = np.asarray(form, dtype=float)

    if w.shape != (x.size, x.size):
        raise ValueError(
            f"alphakepler: cannot contract a vector of length {x.size} with a form of shape {w.shape}"  # noqa: E501
        )

    return x @ w


def compose(form: FloatArray, tensor: FloatArray) -> FloatArray:
    """(W o A)_ij = sum_k W[k, i] A[k, j], so that W o P = 1 for inverse pairs."""

    return form.T @ tensor


def exterior_derivative_1form(one_form: VectorField, x: FloatArray) -> FloatArray:
    jacobian = central_jacobian(one_form, x)

    return jacobian.T - jacobian


def exterior_derivative_2form(form: TensorField, x: FloatArray) -> FloatArray:
    # derivative[i, j, k] = d_i W[j, k]
    derivative = np.einsum("jki->ijk", central_jacobian(form, x))

    return (
        derivative
        + np.einsum("jki->ijk", derivative)
        + np.einsum("kij->ijk", derivative)
    )


def lie_derivative_2form(vector: VectorField, form: TensorField, x: FloatArray) -> FloatArray:
    """Cartan: L_X W = d(i_X W) + i_X dW."""

    point = np.asarray(x, dtype=float)

    d_contracted = exterior_derivative_1form(
        lambda y: interior_product(vector(y), form(y)), point
    )
    contracted_d = np.einsum("i,ijk->jk", vector(point), exterior_derivative_2form(form, point))

    return d_contracted + contracted_d


def commutator(first: VectorField, second: VectorField, x: FloatArray) -> FloatArray:
    point = np.asarray(x, dtype=float)

    return central_jacobian(second, point) @ first(point) - central_jacobian(
        first, point
    ) @ second(point)


def lie_derivative_tensor(vector: VectorField, tensor: TensorField, x: FloatArray) -> FloatArray:
    point = np.asarray(x, dtype=float)

    t = tensor(point)
    v = vector(point)
    dt = central_jacobian(tensor, point)
    dv = central_jacobian(vector, point)

    return dt @ v - dv @ t + t @ dv


def torsion_tensor(tensor: TensorField, x: FloatArray) -> FloatArray:
    """
    Components N[i, j, k] of the Nijenhuis torsion, so that
    N_T(X, Y)^i = N[i, j, k] X^j Y^k.
    """

    point = np.asarray(x, dtype=float)

    t = tensor(point)
    # dt[i, j, l] = d_l T^i_j
    dt = central_jacobian(tensor, point)

    return (
        np.einsum("lj,ikl->ijk", t, dt)
        - np.einsum("lk,ijl->ijk", t, dt)
        - np.einsum("il,lkj->ijk", t, dt)
        + np.einsum("il,ljk->ijk", t, dt)
    )


def nijenhuis_torsion(
    tensor: TensorField, x: FloatArray, first: npt.ArrayLike, second: npt.ArrayLike
) -> FloatArray:
    return np.einsum(
        "ijk,j,k->i",
        torsion_tensor(tensor, x),
        np.asarray(first, dtype=float),
        np.asarray(second, dtype=float),
    )


def schouten_bracket(first: TensorField, second: TensorField, x: FloatArray) -> FloatArray:
    point = np.asarray(x, dtype=float)

    p = first(point)
    q = second(point)
    # dp[j, k, l] = d_l P^{jk}
    dp = central_jacobian(first, point)
    dq = central_jacobian(second, point)

    partial = np.einsum("li,jkl->ijk", p, dq) + np.einsum("li,jkl->ijk", q, dp)

    return partial + np.einsum("jki->ijk", partial) + np.einsum("kij->ijk", partial)
