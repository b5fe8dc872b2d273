from alphakepler.campaign import Campaign
from alphakepler.equatorial import reconstruction_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The closed-form 2-forms Omega1 and Omega2 are the real and imaginary
    parts of dM ^ dN*, with the wedge assembled from jet differentials.
    """

    name = "omega-reconstruction"
    code = 133
    categories = ("equatorial",)
    tol = 1e-10


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(reconstruction_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
