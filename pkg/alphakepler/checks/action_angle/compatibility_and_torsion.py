from alphakepler.action_angle import compatibility_and_torsion
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import VerificationReport


class IdentityInfo(Identity):
    """
    The two Poisson structures on the action-angle chart are compatible,
    the second one satisfies the Jacobi identity, and the recursion operator
    T has vanishing Nijenhuis torsion:

    ```
    [P, P1] = [P1, P1] = 0
    N_T = 0
    ```
    """

    name = "compatibility-and-torsion"
    code = 143
    categories = ("action-angle",)
    tol = 1e-8


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = compatibility_and_torsion(
        campaign.action_states(IdentityInfo.code), IdentityInfo.tol, alpha=campaign.alpha
    )

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
