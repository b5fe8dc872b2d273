import pytest

from alphakepler.error import IdentityCategory, IdentityCode
from alphakepler.loader import load_checks
from alphakepler.main import run_campaign
from alphakepler.settings import Settings

ALPHAS = [1.0, 1.25, 1.5, 2.0]


@pytest.mark.parametrize("alpha", ALPHAS)
def test_every_identity_holds(alpha: float) -> None:
    settings = Settings(alpha=alpha, m=1.0, k=1.0, n_points=200, seed=42)

    result, timing = run_campaign(settings)

    failures = [str(report) for report in result.reports if not report.passed]

    assert not failures, "\n".join(failures)

    codes = {report.code for report in result.reports}

    assert codes <= set(timing)
    assert ("AKP113" in codes) is (alpha == 1)


@pytest.mark.parametrize("alpha", [1.25, 1.5, 2.0])
def test_bracket_axioms_hold_away_from_alpha_one(alpha: float) -> None:
    settings = Settings(
        alpha=alpha,
        m=1.0,
        k=1.0,
        n_points=200,
        seed=42,
        disable_all=True,
        enable={IdentityCode(100)},
    )

    result, _ = run_campaign(settings)

    assert [report.code for report in result.reports] == ["AKP100"]

    report = result.reports[0]

    assert report.n_points == 200
    assert report.passed, report
    assert report.max_residual < 1e-8


def test_every_enabled_identity_reports() -> None:
    settings = Settings(alpha=1.0, m=1.0, k=1.0, n_points=5)

    result, timing = run_campaign(settings)

    loaded = {f"AKP{identity.code}" for identity, _ in load_checks(settings)}

    assert set(timing) == loaded
    assert {report.code for report in result.reports} == loaded


def test_category_filter_limits_campaign() -> None:
    settings = Settings(
        alpha=1.0,
        m=1.0,
        k=1.0,
        n_points=5,
        disable_all=True,
        enable={IdentityCategory("symmetry")},
    )

    result, _ = run_campaign(settings)

    assert result.reports
    assert all(report.code.startswith("AKP12") for report in result.reports)
