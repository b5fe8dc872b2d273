from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar


@dataclass(frozen=True)
class IdentityCode:
    """
    This class represents an identity code id which can be used to enable,
    disable, and explain identity checks. The prefix defaults to "AKP", but
    checks loaded from outside of alphakepler are free to pick their own.
    """

    id: int
    prefix: str = "AKP"

    @classmethod
    def from_identity(cls, identity: type[Identity]) -> IdentityCode:
        return IdentityCode(identity.code, identity.prefix)

    def __str__(self) -> str:
        return f"{self.prefix}{self.id}"


@dataclass(frozen=True)
class IdentityCategory:
    value: str


IdentityClassifier = IdentityCategory | IdentityCode


class Identity:
    enabled: ClassVar[bool] = True
    name: ClassVar[str | None] = None
    prefix: ClassVar[str] = "AKP"
    categories: ClassVar[tuple[str, ...]] = ()
    code: ClassVar[int]
    tol: ClassVar[float] = 1e-8


class DomainError(ValueError):
    """
    Raised when an input leaves the region where a formula is defined. Every
    subclass is still a `ValueError`, so the command line front end reports it
    like any other bad input.
    """

    def __init__(self, msg: str) -> None:
        super().__init__(f"alphakepler: {msg}")


class SingularWeightError(DomainError):
    pass


class ZeroEnergyError(DomainError):
    pass


class EquatorialDomainError(DomainError):
    pass


class UnboundStateError(DomainError):
    pass


class SingularRecursionError(DomainError):
    pass


class AngleDomainError(DomainError):
    pass
