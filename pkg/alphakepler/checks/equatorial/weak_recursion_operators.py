from alphakepler.campaign import Campaign
from alphakepler.equatorial import recursion_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The tensors T1 and T2 built from the inverse of omega recover the two
    parts of Omega when composed back with omega.
    """

    name = "weak-recursion-operators"
    code = 138
    categories = ("equatorial",)
    tol = 1e-10


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(recursion_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
