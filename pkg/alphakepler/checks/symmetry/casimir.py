from alphakepler.campaign import Campaign
from alphakepler.error import Identity
from alphakepler.report import ResidualCollector, VerificationReport, relative_residual
from alphakepler.symmetry import Branch, casimir1, generator_matrix


class IdentityInfo(Identity):
    """
    The first Casimir of the generator matrix, written as the sum of its
    squared entries, equals 2 alpha^4 (|L'|^2 + |Gamma|^2). The generator
    matrix is antisymmetric below zero energy; above it the boost column is
    symmetric.
    """

    name = "casimir-consistency"
    code = 124
    categories = ("symmetry",)
    tol = 1e-12


def check(campaign: Campaign, reports: list[VerificationReport]) -> None:
    collector = ResidualCollector()

    for branch in Branch:
        for point in campaign.branch_points(IdentityInfo.code, branch):
            with collector.point():
                from_matrix, from_vectors = casimir1(point, campaign.params, campaign.alpha)
                generators = generator_matrix(point, campaign.params, campaign.alpha).M

                boosts = generators[:3, 3]
                mirrored = -generators[3, :3] if branch is Branch.MINUS else generators[3, :3]

                collector.add(
                    max(
                        relative_residual(from_matrix - from_vectors, from_matrix, from_vectors),
                        relative_residual(generators[:3, :3] + generators[:3, :3].T, generators),
                        relative_residual(boosts - mirrored, boosts),
                    )
                )

    reports.append(
        VerificationReport.for_check(IdentityInfo, collector, campaign.alpha, campaign.seed)
    )
