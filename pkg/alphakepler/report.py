from __future__ import annotations

from collections.abc import Generator, Iterable
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Literal

import numpy as np
import numpy.typing as npt

from .error import EquatorialDomainError, IdentityCode, SingularWeightError

if TYPE_CHECKING:
    from .error import Identity

ABSOLUTE_FLOOR = 1e-14


def relative_residual(total: npt.ArrayLike, *terms: npt.ArrayLike) -> float:
    """
    Largest |total| measured against the largest term that entered it. When
    every term is below `ABSOLUTE_FLOOR` the absolute value is returned.
    """

    error = float(np.max(np.abs(total)))
    scale = max((float(np.max(np.abs(term))) for term in terms if np.size(term)), default=0.0)

    return error / scale if scale > ABSOLUTE_FLOOR else error


@dataclass
class ResidualCollector:
    residuals: list[float] = field(default_factory=list)
    excluded: int = 0

    def add(self, residual: float) -> None:
        self.residuals.append(float(residual))

    def extend(self, residuals: Iterable[float]) -> None:
        self.residuals.extend(float(x) for x in residuals)

    @contextmanager
    def point(self) -> Generator[None, None, None]:
        try:
            yield

        except (SingularWeightError, EquatorialDomainError):
            self.excluded += 1

    @property
    def n_points(self) -> int:
        return len(self.residuals)


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    alpha: float
    n_points: int
    max_residual: float
    mean_residual: float
    tol: float
    code: str = ""
    excluded: int = 0
    seed: int | None = None
    min_residual: float = 0.0

    # "lower" reports pass when every measured value exceeds `tol`
    bound: Literal["upper", "lower"] = "upper"

    @classmethod
    def build(
        cls,
        identity: str,
        collector: ResidualCollector,
        alpha: float,
        tol: float,
        *,
        bound: Literal["upper", "lower"] = "upper",
    ) -> VerificationReport:
        values = np.asarray(collector.residuals, dtype=float)

        return cls(
            identity=identity,
            alpha=alpha,
            n_points=collector.n_points,
            max_residual=float(values.max()) if values.size else 0.0,
            mean_residual=float(values.mean()) if values.size else 0.0,
            min_residual=float(values.min()) if values.size else 0.0,
            tol=tol,
            excluded=collector.excluded,
            bound=bound,
        )

    @classmethod
    def for_check(
        cls,
        identity: type[Identity],
        collector: ResidualCollector,
        alpha: float,
        seed: int | None = None,
        *,
        bound: Literal["upper", "lower"] = "upper",
    ) -> VerificationReport:
        report = cls.build(identity.name or "", collector, alpha, identity.tol, bound=bound)

        return report.for_identity(identity, seed)

    def for_identity(
        self, identity: type[Identity], seed: int | None = None
    ) -> VerificationReport:
        return replace(
            self,
            identity=identity.name or self.identity,
            code=str(IdentityCode.from_identity(identity)),
            seed=seed,
        )

    @property
    def passed(self) -> bool:
        if self.n_points < 1:
            return False

        if self.bound == "lower":
            return self.min_residual > self.tol

        return self.max_residual < self.tol

    def to_json(self) -> dict[str, object]:
        return {
            "identity": self.identity,
            "code": self.code,
            "alpha": self.alpha,
            "n_points": self.n_points,
            "excluded": self.excluded,
            "max_residual": self.max_residual,
            "mean_residual": self.mean_residual,
            "tol": self.tol,
            "bound": self.bound,
            "pass": self.passed,
        }

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        relation = "<" if self.bound == "upper" else ">"
        shown = self.max_residual if self.bound == "upper" else self.min_residual

        return (
            f"[{self.code or '?'}] {self.identity} (alpha={self.alpha:g}): "
            f"{verdict}, residual {shown:.3e} {relation} {self.tol:.0e} "
            f"over {self.n_points} point(s), {self.excluded} excluded"
        )


@dataclass
class CampaignResult:
    reports: list[VerificationReport] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_json(self) -> list[dict[str, object]]:
        return [report.to_json() for report in self.reports]
