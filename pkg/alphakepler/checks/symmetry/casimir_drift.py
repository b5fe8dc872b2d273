from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.kepler import integrate_orbit
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.symmetry import Branch, casimir1

ORBITS = 2
ARC = 0.2


class IdentityInfo(Identity):
    """
    The first Casimir, built from the conserved L' and Gamma, stays constant
    along short integrated arcs on both sides of the zero energy surface.
    """

    name = "casimir-drift"
    code = 125
    categories = ("symmetry",)
    tol = 1e-6


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()
    count = min(campaign.n_points, ORBITS)

    for branch in Branch:
        for start in campaign.branch_points(IdentityInfo.code, branch)[:count]:
            with collector.point():
                trajectory = integrate_orbit(
                    start,
                    campaign.params,
                    campaign.alpha,
                    ARC,
                    campaign.rel_tol,
                    method=campaign.method,
                )
                initial, _ = casimir1(trajectory.states[0], campaign.params, campaign.alpha)

                collector.add(
                    max(
                        relative_residual(
                            casimir1(state, campaign.params, campaign.alpha)[0] - initial,
                            initial,
                        )
                        for state in trajectory.states
                    )
                )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
