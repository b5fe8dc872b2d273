from alphakepler.campaign import Campaign
from alphakepler.equatorial import field_residuals
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The closed-form Hamiltonian field of the reduced system and the field of
    Theta = pphi cos(phi) agree with the fields derived from the equatorial
    bracket, and the Hamiltonian field contracts the symplectic form to -dH.
    """

    name = "equatorial-field"
    code = 130
    categories = ("equatorial",)
    tol = 1e-10


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.equatorial_points(IdentityInfo.code):
        with collector.point():
            collector.add(max(field_residuals(point, campaign.params)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
