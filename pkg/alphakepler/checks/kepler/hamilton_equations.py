from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.kepler import hamilton_rhs
from alphakepler.poisson import hamiltonian_field
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.symmetry import hamiltonian_field_of


class IdentityInfo(Identity):
    """
    The explicit Hamilton equations

    ```
    dq^i/dt = (alpha / m) |p_i|^(alpha - 1) p_i |q^i|^(1 - alpha)
    dp_i/dt = -(alpha k / r^3) |q^i|^(alpha - 1) q^i |p_i|^(1 - alpha)
    ```

    coincide with the Hamiltonian vector field P dH of the conformable
    Kepler Hamiltonian.
    """

    name = "hamilton-equations"
    code = 110
    categories = ("kepler",)
    tol = 1e-10


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    energy = hamiltonian_field_of(campaign.params, campaign.alpha)
    collector = ResidualCollector()

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            explicit = hamilton_rhs(point, campaign.params, campaign.alpha)
            derived = hamiltonian_field(energy, point, campaign.alpha)

            collector.add(relative_residual(explicit - derived, explicit, derived))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
