import pytest

from alphakepler.error import EquatorialDomainError, SingularWeightError, ZeroEnergyError
from alphakepler.report import (
    ABSOLUTE_FLOOR,
    CampaignResult,
    ResidualCollector,
    VerificationReport,
    relative_residual,
)


def collect(*residuals: float) -> ResidualCollector:
    collector = ResidualCollector()
    collector.extend(residuals)

    return collector


def test_relative_residual_scales_by_largest_term() -> None:
    assert relative_residual(1e-6, [2.0, -4.0], 1.0) == pytest.approx(2.5e-7)


def test_relative_residual_falls_back_to_absolute_value() -> None:
    assert relative_residual(3e-15, 1e-16) == 3e-15
    assert relative_residual(3e-15) == 3e-15
    assert relative_residual(0.5, []) == 0.5
    assert ABSOLUTE_FLOOR == 1e-14


def test_collector_excludes_singular_points() -> None:
    collector = ResidualCollector()

    for error in (SingularWeightError, EquatorialDomainError):
        with collector.point():
            raise error("off the domain")

    with collector.point():
        collector.add(1e-12)

    assert collector.n_points == 1
    assert collector.excluded == 2


def test_collector_propagates_other_domain_errors() -> None:
    collector = ResidualCollector()

    with pytest.raises(ZeroEnergyError), collector.point():
        raise ZeroEnergyError("on the boundary")

    assert collector.excluded == 0


def test_report_statistics() -> None:
    report = VerificationReport.build("made-up", collect(1e-12, 3e-12, 2e-12), 1.5, 1e-10)

    assert report.n_points == 3
    assert report.max_residual == 3e-12
    assert report.min_residual == 1e-12
    assert report.mean_residual == pytest.approx(2e-12)
    assert report.passed


def test_report_without_points_fails() -> None:
    report = VerificationReport.build("made-up", ResidualCollector(), 1.0, 1e-10)

    assert report.n_points == 0
    assert not report.passed


def test_report_above_tolerance_fails() -> None:
    assert not VerificationReport.build("made-up", collect(1e-12, 1e-9), 1.0, 1e-10).passed


def test_lower_bound_report() -> None:
    report = VerificationReport.build(
        "made-up", collect(0.5, 0.01), 1.0, 1e-3, bound="lower"
    )

    assert report.passed
    assert "residual 1.000e-02 > 1e-03" in str(report)

    failing = VerificationReport.build("made-up", collect(0.5, 1e-4), 1.0, 1e-3, bound="lower")

    assert not failing.passed


def test_report_json() -> None:
    report = VerificationReport.build("made-up", collect(1e-12), 2.0, 1e-10)

    assert report.to_json() == {
        "identity": "made-up",
        "code": "",
        "alpha": 2.0,
        "n_points": 1,
        "excluded": 0,
        "max_residual": 1e-12,
        "mean_residual": 1e-12,
        "tol": 1e-10,
        "bound": "upper",
        "pass": True,
    }


def test_report_str() -> None:
    report = VerificationReport("made-up", 1.5, 2, 1e-12, 1e-12, 1e-10, code="AKP999")

    assert str(report) == (
        "[AKP999] made-up (alpha=1.5): pass, residual 1.000e-12 < 1e-10 "
        "over 2 point(s), 0 excluded"
    )


def test_campaign_passes_only_when_every_report_passes() -> None:
    good = VerificationReport.build("good", collect(0.0), 1.0, 1e-10)
    bad = VerificationReport.build("bad", collect(1.0), 1.0, 1e-10)

    assert CampaignResult(reports=[good]).passed
    assert not CampaignResult(reports=[good, bad]).passed
    assert CampaignResult().passed
    assert [entry["identity"] for entry in CampaignResult(reports=[good, bad]).to_json()] == [
        "good",
        "bad",
    ]
