from alphakepler.campaign import Campaign
from alphakepler.equatorial import tilde_commutator_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The complex fields fail to commute with X_H by a multiple of X_gamma:

    ```
    [X_H, X1] = i B X_gamma
    [X_H, X2] = -i B X_gamma
    ```
    """

    name = "tilde-commutators"
    code = 137
    categories = ("equatorial",)
    tol = 1e-7


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(tilde_commutator_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
