from alphakepler.campaign import Campaign
from alphakepler.equatorial import first_integral_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    Theta and both parts of B = M N are first integrals of the reduced
    Hamiltonian:

    ```
    {H, Theta} = {H, B_s} = {H, B_b} = 0
    ```
    """

    name = "equatorial-first-integrals"
    code = 131
    categories = ("equatorial",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(first_integral_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
