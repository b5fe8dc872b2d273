from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import VerificationReport
from alphakepler.symmetry import Branch, so4_so13_report


class IdentityInfo(Identity):
    """
    Below zero energy, L' and the scaled vector Gamma close so(4):

    ```
    {L'_i, L'_j} = eps_ijh alpha^2 L'_h
    {L'_i, Gamma_j} = eps_ijh alpha^2 Gamma_h
    {Gamma_i, Gamma_j} = eps_ijh alpha^2 L'_h
    ```
    """

    name = "so4-structure"
    code = 122
    categories = ("symmetry",)
    tol = 1e-7


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = so4_so13_report(
        campaign.branch_points(IdentityInfo.code, Branch.MINUS),
        campaign.params,
        campaign.alpha,
        IdentityInfo.tol,
        branch=Branch.MINUS,
    )

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
