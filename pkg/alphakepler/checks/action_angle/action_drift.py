from alphakepler.action_angle import action_drifts, actions_along
from alphakepler.campaign import Campaign
from alphakepler.equatorial import eq_hamiltonian, integrate_equatorial
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport

ORBITS = 4
FLOW_TIME = 2.0

# stays clear of the zero energy surface where the actions blow up
MAX_ENERGY = -0.05


class IdentityInfo(Identity):
    """
    Actions and eigenvalue invariants evaluated along integrated bound
    equatorial orbits stay constant.
    """

    name = "action-drift"
    code = 146
    categories = ("action-angle",)
    tol = 1e-7


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    bound = [
        point
        for point in campaign.equatorial_points(IdentityInfo.code)
        if eq_hamiltonian(point, campaign.params) < MAX_ENERGY
    ]

    for point in bound[:ORBITS]:
        with collector.point():
            traj = integrate_equatorial(
                point, campaign.params, FLOW_TIME, campaign.rel_tol, method=campaign.method
            )
            rows = actions_along(traj, "equatorial", campaign.params)

            collector.add(max(action_drifts(rows).values()))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
