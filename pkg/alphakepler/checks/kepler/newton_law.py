from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.kepler import flow_acceleration, newton_law, newton_residual
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual


class IdentityInfo(Identity):
    """
    The acceleration obtained by differentiating Hamilton's equations along
    the flow obeys the conformable Newton law

    ```
    d2q^i/dt2 = -(alpha^3 k / (m r^3)) q^i
                + (alpha^2 / m^2) (1 - alpha) q^i (|p_i| / |q^i|)^(2 alpha)
    ```

    which reduces to the inverse square law at alpha = 1.
    """

    name = "newton-law"
    code = 111
    categories = ("kepler",)
    tol = 1e-8


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            residual = newton_residual(point, campaign.params, campaign.alpha)
            flow = flow_acceleration(point, campaign.params, campaign.alpha)
            law = newton_law(point, campaign.params, campaign.alpha)

            collector.add(relative_residual(residual, flow, law))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
