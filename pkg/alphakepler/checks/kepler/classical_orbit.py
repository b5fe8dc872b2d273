import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.kepler import (
    integrate_orbit,
    invariant_drifts,
    kepler_period,
    vis_viva_residual,
)
from alphakepler.report import ResidualCollector, VerificationReport
from alphakepler.types import FloatArray

CIRCULAR = np.array([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])
ECCENTRIC = np.array([1.0, 0.0, 0.0, 0.0, 1.2, 0.0])
PERIODS = 10


class IdentityInfo(Identity):
    """
    The classical limit alpha = 1 reproduces textbook Kepler motion: a
    circular orbit closes after one period T = 2 pi sqrt(m a^3 / k), an
    eccentric orbit conserves H, L and A over ten periods, and every sample
    satisfies the vis-viva relation v^2 = k (2 / r - 1 / a) / m.

    Runs only when the campaign is at alpha = 1.
    """

    name = "classical-orbit"
    code = 113
    categories = ("kepler",)
    tol = 1e-7


def _scaled(state: FloatArray, campaign: Campaign) -> FloatArray:
    # circular speed for m and k other than 1
    scaled = state.copy()
    scaled[3:] *= np.sqrt(campaign.params.m * campaign.params.k)

    return scaled


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    if campaign.alpha != 1:
        return

    params = campaign.params
    collector = ResidualCollector()

    circular = _scaled(CIRCULAR, campaign)
    period = kepler_period(circular, params)
    closed = integrate_orbit(circular, params, 1.0, period, 1e-12, method="DOP853")

    collector.add(float(np.max(np.abs(closed.states[-1] - circular))))

    eccentric = _scaled(ECCENTRIC, campaign)
    long_run = integrate_orbit(
        eccentric,
        params,
        1.0,
        PERIODS * kepler_period(eccentric, params),
        1e-12,
        method="DOP853",
    )

    drifts = invariant_drifts(long_run, params, 1.0)
    collector.extend(float(np.max(values)) for values in drifts.values())
    collector.add(max(vis_viva_residual(state, params) for state in long_run.states))

    reports.append(VerificationReport.for_check(IdentityInfo, collector, 1.0, campaign.seed))
