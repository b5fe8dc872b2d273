import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.equatorial import PINNED_POINT, recursion_invariance_norm, recursion_matrix
from alphakepler.error import Identity
from alphakepler.poisson import torsion_tensor
from alphakepler.report import ResidualCollector, VerificationReport


class IdentityInfo(Identity):
    """
    T1 is not a recursion operator in the strong sense: at a generic point
    it is not invariant under the Hamiltonian flow and its Nijenhuis torsion
    does not vanish. This identity passes when both norms stay above the
    tolerance.
    """

    name = "recursion-non-invariance"
    code = 139
    categories = ("equatorial",)
    tol = 1e-3


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    with collector.point():
        torsion = torsion_tensor(lambda y: recursion_matrix(y, campaign.params, 1), PINNED_POINT)

        collector.add(
            min(
                recursion_invariance_norm(PINNED_POINT, campaign.params, 1),
                float(np.linalg.norm(torsion)),
            )
        )

    reports.append(
        VerificationReport.for_check(
            IdentityInfo, collector, campaign.alpha, campaign.seed, bound="lower"
        )
    )
