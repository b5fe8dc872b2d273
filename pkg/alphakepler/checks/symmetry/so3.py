from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import VerificationReport
from alphakepler.symmetry import so3_report


class IdentityInfo(Identity):
    """
    The components of L' = -L close the rotation algebra with structure
    constants scaled by alpha^2:

    ```
    {L'_i, L'_j} = eps_ijh alpha^2 L'_h
    ```
    """

    name = "so3-structure"
    code = 121
    categories = ("symmetry",)
    tol = 1e-8


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = so3_report(campaign.phase_points(IdentityInfo.code), campaign.alpha, IdentityInfo.tol)

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
