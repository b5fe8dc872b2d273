from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport
from alphakepler.symmetry import Branch, first_integral_residuals


class IdentityInfo(Identity):
    """
    The conformable angular momentum L, the Laplace-Runge-Lenz vector A and
    the scaled Runge-Lenz-Pauli vector Gamma = -A / sqrt(-+2 m H) Poisson
    commute with the Hamiltonian, on both sides of the zero energy surface:

    ```
    {H, L_i} = {H, A_i} = {H, Gamma_i} = 0
    ```
    """

    name = "first-integrals"
    code = 120
    categories = ("symmetry",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for branch in Branch:
        for point in campaign.branch_points(IdentityInfo.code, branch):
            with collector.point():
                collector.add(
                    max(first_integral_residuals(point, campaign.params, campaign.alpha))
                )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
