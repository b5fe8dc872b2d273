from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    This check records a zero residual for every sampled phase point
    """

    name = "zero-residual"
    prefix = "XYZ"
    code = 100
    categories = ("testing",)


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()
    collector.extend(0.0 for _ in campaign.phase_points(IdentityInfo.code))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
