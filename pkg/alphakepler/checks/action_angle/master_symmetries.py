from alphakepler.action_angle import commutator_checks
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import VerificationReport


class IdentityInfo(Identity):
    """
    The hierarchy fields commute pairwise, and the master symmetries climb
    the hierarchy one step at a time:

    ```
    [X_(j-1), Delta_j] = X_j
    L_Delta omega = omega1
    Delta(H) = m k^2 / (2 S)
    ```
    """

    name = "master-symmetries"
    code = 142
    categories = ("action-angle",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = commutator_checks(
        campaign.action_states(IdentityInfo.code), IdentityInfo.tol, alpha=campaign.alpha
    )

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
