from alphakepler.campaign import Campaign
from alphakepler.equatorial import tilde_lie_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The complex fields X1 = N* X_M and X2 = M X_N* deform the symplectic
    form into Omega with opposite signs:

    ```
    L_{X1} omega = Omega
    L_{X2} omega = -Omega
    ```
    """

    name = "tilde-lie-derivatives"
    code = 136
    categories = ("equatorial",)
    tol = 1e-7


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(tilde_lie_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
