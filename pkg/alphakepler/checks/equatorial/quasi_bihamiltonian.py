from alphakepler.campaign import Campaign
from alphakepler.equatorial import quasi_check
from alphakepler.error import Identity
from alphakepler.report import VerificationReport


class IdentityInfo(Identity):
    """
    The reduced Hamiltonian field is quasi-Hamiltonian for both parts of
    Omega, with gamma as the integrating factor:

    ```
    i_{X_H} Omega1 = -gamma dB_b
    i_{X_H} Omega2 = gamma dB_s
    ```
    """

    name = "quasi-bi-hamiltonian"
    code = 134
    categories = ("equatorial",)
    tol = 1e-8


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    report = quasi_check(
        list(campaign.equatorial_points(IdentityInfo.code)),
        campaign.params,
        IdentityInfo.tol,
        alpha=campaign.alpha,
    )

    reports.append(report.for_identity(IdentityInfo, campaign.seed))
