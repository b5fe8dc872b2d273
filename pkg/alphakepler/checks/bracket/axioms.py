from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.poisson import bracket_axiom_report, cartesian_structure
from alphakepler.report import VerificationReport
from alphakepler.symmetry import hamiltonian_field_of, primed_angular_momentum_fields
from alphakepler.types import ScalarField


class IdentityInfo(Identity):
    """
    The conformable bracket is a Poisson bracket: it is antisymmetric, it
    obeys the Leibniz rule {f, gh} = g{f, h} + h{f, g}, and the Jacobi
    identity

    ```
    {f, {g, h}} + {g, {h, f}} + {h, {f, g}} = 0
    ```

    holds. Checked on two triples at points of the positive orthant: a
    polynomial triple and (H, L1, L2). The inner bracket of the Jacobi sum is
    differentiated with central differences.
    """

    name = "bracket-axioms"
    code = 100
    categories = ("bracket",)
    tol = 1e-8


def _polynomial_triple() -> tuple[ScalarField, ScalarField, ScalarField]:
    return (
        lambda x: x[0] * x[3] + x[1] * x[1],
        lambda x: x[4] * x[2] - x[0] * x[5] * x[5],
        lambda x: x[3] * x[3] * x[1] + x[2],
    )


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    structure = cartesian_structure(campaign.alpha)
    points = campaign.phase_points(IdentityInfo.code)

    energy = hamiltonian_field_of(campaign.params, campaign.alpha)
    first, second, _ = primed_angular_momentum_fields(campaign.alpha)

    worst = max(
        (
            bracket_axiom_report(triple, points, structure, IdentityInfo.tol, alpha=campaign.alpha)
            for triple in (_polynomial_triple(), (energy, first, second))
        ),
        key=lambda report: report.max_residual,
    )

    reports.append(worst.for_identity(IdentityInfo, campaign.seed))
