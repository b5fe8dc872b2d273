import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.poisson import cartesian_bivector, central_jacobian, schouten_bracket
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.types import FloatArray


class IdentityInfo(Identity):
    """
    The Schouten bracket of the conformable bivector with itself vanishes,
    [P, P] = 0. This is the Jacobi identity stated on the bivector, and it is
    measured against the size of the products P dP it is built from.
    """

    name = "schouten-self-compatibility"
    code = 104
    categories = ("bracket",)
    tol = 1e-8


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    def bivector(x: FloatArray) -> FloatArray:
        return cartesian_bivector(x, campaign.alpha)

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            scale = float(np.max(np.abs(bivector(point)))) * float(
                np.max(np.abs(central_jacobian(bivector, point)))
            )

            collector.add(relative_residual(schouten_bracket(bivector, bivector, point), scale))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
