from alphakepler.action_angle import spectrum_residuals
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    The eigenvalues of R are I1 = J1 - 2 J2 and I2 = J1 + 2 J2, those of its
    inverse are their reciprocals, and the two invariants Poisson commute.
    """

    name = "eigenvalue-invariants"
    code = 144
    categories = ("action-angle",)
    tol = 1e-12


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for state in campaign.action_states(IdentityInfo.code):
        collector.add(max(spectrum_residuals(state)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
