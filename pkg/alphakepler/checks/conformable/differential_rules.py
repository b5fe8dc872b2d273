from collections.abc import Sequence

import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.conformable import (
    abs_power,
    alpha_add,
    alpha_sub,
    conformable_differential,
    g_inv,
    g_map,
    spow,
    value_of,
)
from alphakepler.error import Identity
from alphakepler.kepler import kepler_hamiltonian
from alphakepler.poisson import central_jacobian
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.types import FloatArray, Num, ScalarField


class IdentityInfo(Identity):
    """
    First order rules of the conformable differential
    d_alpha f = sum alpha |x_mu|^(alpha - 1) df/dx_mu dx_mu:

    ```
    d_alpha(a f + b g) = a d_alpha f + b d_alpha g
    d_alpha(f g) = f d_alpha g + g d_alpha f
    d_alpha(f^3) = 3 f^2 d_alpha f
    d_alpha(c) = 0
    ```

    The differential is also compared against central differences, and the
    alpha-addition is checked to be commutative, associative and inverted by
    the alpha-subtraction, with g_inv(g(x)) = x.
    """

    name = "conformable-differential-rules"
    code = 105
    categories = ("conformable",)
    tol = 1e-8


def _rule_residuals(f: ScalarField, g: ScalarField, x: FloatArray, alpha: float) -> list[float]:
    def d(h: ScalarField) -> FloatArray:
        return conformable_differential(h, x, alpha)

    fx, gx = value_of(f(list(x))), value_of(g(list(x)))
    df, dg = d(f), d(g)

    linear = d(lambda y: 2 * f(y) - 3 * g(y))
    product = d(lambda y: f(y) * g(y))
    cube = d(lambda y: f(y) ** 3)
    constant = d(lambda _: 7.0)

    weights = alpha * abs_power(x, alpha - 1)
    numeric = weights * central_jacobian(lambda y: np.asarray(value_of(f(list(y)))), x)

    return [
        relative_residual(linear - (2 * df - 3 * dg), linear, 2 * df, 3 * dg),
        relative_residual(product - fx * dg - gx * df, product, fx * dg, gx * df),
        relative_residual(cube - 3 * fx**2 * df, cube, 3 * fx**2 * df),
        float(np.max(np.abs(constant))),
        relative_residual(df - numeric, df, numeric),
    ]


def _addition_residuals(x: FloatArray, alpha: float) -> list[float]:
    a, b, c = x[:3]

    def add(u: float, v: float) -> float:
        return alpha_add(u, v, alpha)

    return [
        relative_residual(add(a, b) - add(b, a), add(a, b)),
        relative_residual(add(add(a, b), c) - add(a, add(b, c)), add(add(a, b), c)),
        abs(alpha_sub(a, a, alpha)),
        relative_residual(g_inv(g_map(x, alpha), alpha) - x, x),
    ]


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    alpha = campaign.alpha
    collector = ResidualCollector()

    def energy(y: Sequence[Num]) -> Num:
        return kepler_hamiltonian(y, campaign.params, alpha)

    def mixed(y: Sequence[Num]) -> Num:
        return spow(y[0], alpha) * y[4] - y[2] * y[3] / y[5]

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            collector.add(
                max(
                    *_rule_residuals(energy, mixed, point, alpha),
                    *_addition_residuals(point, alpha),
                )
            )

    reports.append(VerificationReport.for_check(IdentityInfo, collector, alpha, campaign.seed))
