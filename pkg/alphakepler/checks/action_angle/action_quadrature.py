import math

from alphakepler.action_angle import (
    angle_coords,
    angular_action,
    energy_from_actions,
    radial_action,
    radial_angle_quadrature,
    turning_points,
)
from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual

# fraction of the way from the pericenter to the apocenter
RADIAL_FRACTIONS = (0.1, 0.9)


class IdentityInfo(Identity):
    """
    The closed-form actions and radial angle agree with direct quadrature:
    J1 = (1 / pi) times the integral of p_r between the turning points,
    J2 = (1 / 2 pi) times the integral of D sin^2 phi over a turn, and phi1
    at r is the integral of its radial derivative from the pericenter.
    """

    name = "action-quadrature"
    code = 145
    categories = ("action-angle",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()
    rng = campaign.rng(IdentityInfo.code, 1)

    for state in campaign.action_states(IdentityInfo.code):
        r_p, r_a = turning_points(state)
        r = r_p + rng.uniform(*RADIAL_FRACTIONS) * (r_a - r_p)

        j1 = radial_action(energy_from_actions(state), state.D, campaign.params)
        j2 = angular_action(state.D)
        phi1, _ = angle_coords(r, 0.5 * math.pi, state)
        integrated = radial_angle_quadrature(r, state)

        collector.add(
            max(
                relative_residual(j1 - state.J1, state.S),
                relative_residual(j2 - state.J2, state.S),
                relative_residual(integrated - phi1, math.pi),
            )
        )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
