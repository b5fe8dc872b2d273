import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.poisson import bracket_weights, cartesian_structure, coordinate
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual


class IdentityInfo(Identity):
    """
    Brackets of the coordinate functions reproduce the conformable
    commutation table:

    ```
    {q^i, q^j} = 0
    {p_i, p_j} = 0
    {p_i, q^j} = alpha^-2 |p_i|^(1 - alpha) |q^i|^(1 - alpha) delta_ij
    ```
    """

    name = "canonical-table"
    code = 101
    categories = ("bracket",)
    tol = 1e-12


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    structure = cartesian_structure(campaign.alpha)
    collector = ResidualCollector()

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            weights = bracket_weights(point, campaign.alpha)

            table = np.array([
                [structure.bracket(coordinate(i), coordinate(j), point) for j in range(6)]
                for i in range(6)
            ])

            expected = np.zeros((6, 6))
            expected[3:, :3] = np.diag(weights)
            expected[:3, 3:] = -np.diag(weights)

            collector.add(relative_residual(table - expected, expected))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
