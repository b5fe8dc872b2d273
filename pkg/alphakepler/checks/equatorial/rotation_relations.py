from alphakepler.campaign import Campaign
from alphakepler.equatorial import rotation_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The Hamiltonian flow rotates the complex functions M and N with angular
    velocity gamma, in opposite senses:

    ```
    {H, M} = i gamma M
    {H, N} = -i gamma N
    ```

    Each relation is checked on its real and imaginary parts.
    """

    name = "rotation-relations"
    code = 132
    categories = ("equatorial",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(rotation_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
