from alphakepler.campaign import Campaign
from alphakepler.equatorial import (
    eq_symplectic_form,
    noether_residuals,
    omega_forms,
    tilde_fields,
)
from alphakepler.error import Identity
from alphakepler.poisson import lie_derivative_2form
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.types import FloatArray, VectorField


class IdentityInfo(Identity):
    """
    X_Theta is an infinitesimal Noether symmetry: it preserves omega,
    commutes with X_H and Poisson commutes with H. The sum of the complex
    fields X1 + X2 preserves omega as well.
    """

    name = "noether-symmetry"
    code = 135
    categories = ("equatorial",)
    tol = 1e-7


def _summed(first: VectorField, second: VectorField) -> VectorField:
    return lambda y: first(y) + second(y)


def _sum_residuals(point: FloatArray, campaign: Campaign) -> list[float]:
    fields = tilde_fields(campaign.params)
    forms = omega_forms(point, campaign.params)
    residuals = []

    for first, second, form in zip(fields["x1"], fields["x2"], forms, strict=True):
        lie = lie_derivative_2form(_summed(first, second), eq_symplectic_form, point)
        residuals.append(relative_residual(lie, form.matrix, eq_symplectic_form(point)))

    return residuals


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(
                max(*noether_residuals(point, campaign.params), *_sum_residuals(point, campaign))
            )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
