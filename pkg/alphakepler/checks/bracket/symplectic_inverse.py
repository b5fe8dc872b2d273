import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.poisson import cartesian_bivector, cartesian_symplectic_form, compose
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual


class IdentityInfo(Identity):
    """
    The conformable symplectic form and the bivector are inverse to each
    other, omega o P = 1, at every point of the orthant interior.
    """

    name = "symplectic-inverse"
    code = 103
    categories = ("bracket",)
    tol = 1e-12


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()
    identity = np.eye(6)

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            form = cartesian_symplectic_form(point, campaign.alpha)
            bivector = cartesian_bivector(point, campaign.alpha)

            collector.add(relative_residual(compose(form, bivector) - identity, identity))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
