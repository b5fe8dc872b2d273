import math

from alphakepler.action_angle import ActionAngleState, actions_from_state, energy_from_actions
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual

ENERGIES = (-2.0, -0.1)

# keeps J1 away from the circular orbit limit
SEPARATION_FRACTION = 0.95


class IdentityInfo(Identity):
    """
    Actions computed from an energy E < 0 and a separation constant D give
    back the energy through E = -m k^2 / (2 (J1 + 2 J2)^2), and D = 2 J2.
    """

    name = "action-round-trip"
    code = 140
    categories = ("action-angle",)
    tol = 1e-12


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()
    rng = campaign.rng(IdentityInfo.code)
    mk = campaign.params.m * campaign.params.k

    for _ in range(campaign.n_points):
        energy = rng.uniform(*ENERGIES)
        limit = mk / math.sqrt(-2 * campaign.params.m * energy)
        separation = rng.uniform(0.0, SEPARATION_FRACTION * limit)

        j1, j2 = actions_from_state(energy, separation, campaign.params)
        state = ActionAngleState(j1, j2, 0.0, 0.0, campaign.params)
        recovered = energy_from_actions(state)

        collector.add(
            max(
                relative_residual(recovered - energy, energy),
                relative_residual(state.S - limit, limit),
                relative_residual(state.D - separation, limit),
            )
        )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
