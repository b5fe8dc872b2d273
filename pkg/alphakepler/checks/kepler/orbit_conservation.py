import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.kepler import integrate_orbit, invariant_drifts
from alphakepler.report import ResidualCollector, VerificationReport
from alphakepler.symmetry import Branch

ORBITS = 4
ARC = 0.2


class IdentityInfo(Identity):
    """
    H, L and A are constant along integrated arcs of the conformable flow.
    Short arcs start from bound and scattering points; an arc stops early
    when it approaches a coordinate hyperplane.
    """

    name = "orbit-conservation"
    code = 112
    categories = ("kepler",)
    tol = 1e-7


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
                drifts = invariant_drifts(trajectory, campaign.params, campaign.alpha)

                collector.add(max(float(np.max(values)) for values in drifts.values()))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
