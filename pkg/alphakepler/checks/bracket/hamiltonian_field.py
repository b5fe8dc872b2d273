import numpy as np

from alphakepler.campaign import Campaign
from alphakepler.conformable import gradient, value_of
from alphakepler.error import Identity
from alphakepler.poisson import (
    cartesian_structure,
    cartesian_symplectic_form,
    central_jacobian,
    coordinate,
    interior_product,
)
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.symmetry import hamiltonian_field_of, lrl_fields, primed_angular_momentum_fields


class IdentityInfo(Identity):
    """
    The Hamiltonian vector field X_f = P df is consistent with the bracket
    and with the symplectic form:

    ```
    X_f(g) = {f, g}
    i_{X_f} omega = -df
    ```

    Checked for f in (H, L'_1, A_1) against every coordinate function g, and
    against a field assembled from central differences of f.
    """

    name = "hamiltonian-field-consistency"
    code = 102
    categories = ("bracket",)
    tol = 1e-9


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    alpha = campaign.alpha
    structure = cartesian_structure(alpha)
    fields = [
        hamiltonian_field_of(campaign.params, alpha),
        primed_angular_momentum_fields(alpha)[0],
        lrl_fields(campaign.params, alpha)[0],
    ]

    collector = ResidualCollector()

    for point in campaign.phase_points(IdentityInfo.code):
        with collector.point():
            residuals = []
            form = cartesian_symplectic_form(point, alpha)

            for f in fields:
                field = structure.hamiltonian_field(f, point)
                df = gradient(f, point)

                brackets = np.array([
                    structure.bracket(f, coordinate(j), point) for j in range(6)
                ])
                contracted = interior_product(field, form)
                numeric = structure.bivector(point).T @ central_jacobian(
                    lambda y, f=f: np.asarray(value_of(f(list(y)))), point
                )

                residuals += [
                    relative_residual(field - brackets, field, brackets),
                    relative_residual(contracted + df, contracted, df),
                    relative_residual(field - numeric, field, numeric),
                ]

            collector.add(max(residuals))

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, alpha, campaign.seed)
    )
