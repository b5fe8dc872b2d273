from alphakepler.action_angle import pairing_residuals
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    Each field of the hierarchy X_0, X_1, X_2 is Hamiltonian for two
    consecutive energies, one per Poisson structure:

    ```
    i_{X_i} omega = -dH_i
    i_{X_i} omega1 = -dH_(i+1)
    ```
    """

    name = "bihamiltonian-hierarchy"
    code = 141
    categories = ("action-angle",)
    tol = 1e-10


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for state in campaign.action_states(IdentityInfo.code):
        collector.add(max(pairing_residuals(state)))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
