from alphakepler.error import Identity
from alphakepler.report import VerificationReport


class IdentityInfo(Identity):
    prefix = "XYZ"
    code = 104


def check(campaign: int, reports: list[VerificationReport]) -> None:
    pass
