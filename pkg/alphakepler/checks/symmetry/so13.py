from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import VerificationReport
from alphakepler.symmetry import Branch, so4_so13_report


class IdentityInfo(Identity):
    """
    Above zero energy the Gamma-Gamma bracket changes sign and the algebra
    becomes so(1,3):

    ```
    {Gamma_i, Gamma_j} = -eps_ijh alpha^2 L'_h
    ```

    The rotation and mixed brackets are as for so(4).
    """

    name = "so13-structure"
    code = 123
    categories = ("symmetry",)
    tol = 1e-7


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = so4_so13_report(
        campaign.branch_points(IdentityInfo.code, Branch.PLUS),
        campaign.params,
        campaign.alpha,
        IdentityInfo.tol,
        branch=Branch.PLUS,
    )

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
