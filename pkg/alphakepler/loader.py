"""
Identity discovery. Every module below `alphakepler.checks`, every module or
package passed with `--load`, and every `alphakepler.plugins` entry point is
searched for an `IdentityInfo` class and the `check` function next to it.
"""

import importlib
import pkgutil
import sys
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from importlib.metadata import entry_points
from inspect import signature
from pathlib import Path
from types import ModuleType
from typing import Any, TypeGuard, get_type_hints

from . import checks as checks_module
from .campaign import Campaign
from .error import Identity, IdentityCategory, IdentityCode
from .report import VerificationReport
from .settings import Settings
from .types import Check

PLUGIN_GROUP = "alphakepler.plugins"


@dataclass(frozen=True)
class IdentityModule:
    identity: type[Identity]
    module: ModuleType

    @property
    def code(self) -> IdentityCode:
        return IdentityCode.from_identity(self.identity)

    @property
    def filename(self) -> Path:
        path = Path(self.module.__file__ or "")

        try:
            return path.relative_to(Path(__file__).parent.parent)

        except ValueError:
            return path


def _search_roots(paths: Sequence[str]) -> list[ModuleType]:
    sys.path.append(str(Path.cwd()))

    plugins = [x.value for x in entry_points(group=PLUGIN_GROUP)]

    return [checks_module, *(importlib.import_module(x) for x in [*paths, *plugins])]


def _leaf_modules(root: ModuleType) -> Iterator[ModuleType]:
    if not hasattr(root, "__path__"):
        yield root

        return

    for info in pkgutil.walk_packages(root.__path__, f"{root.__name__}."):
        if not info.ispkg:
            yield importlib.import_module(info.name)


def is_valid_identity_class(obj: Any) -> TypeGuard[type[Identity]]:  # type: ignore
    return (
        isinstance(obj, type)
        and obj.__name__.startswith("IdentityInfo")
        and issubclass(obj, Identity)
    )


def identity_class(module: ModuleType) -> type[Identity] | None:
    for name, obj in vars(module).items():
        if name.startswith("IdentityInfo") and is_valid_identity_class(obj):
            return obj

    return None


def discover(paths: Sequence[str]) -> Iterator[IdentityModule]:
    seen: set[str] = set()

    for root in _search_roots(paths):
        for module in _leaf_modules(root):
            if module.__name__ in seen:
                continue

            seen.add(module.__name__)

            if identity := identity_class(module):
                yield IdentityModule(identity, module)


def should_load_check(settings: Settings, identity: type[Identity]) -> bool:
    """
    An explicit code wins over a category, which wins over `--disable-all`
    and the identity's own default.
    """

    code = IdentityCode.from_identity(identity)

    if code in settings.enable or code in settings.disable:
        return code in settings.enable

    categories = {IdentityCategory(cat) for cat in identity.categories}

    if settings.enable & categories:
        return True

    if settings.disable & categories or settings.disable_all:
        return False

    return identity.enabled or settings.enable_all


def _located(func: Any, msg: str) -> TypeError:  # type: ignore
    code = getattr(func, "__code__", None)

    if code is None:
        return TypeError(msg)  # pragma: no cover

    return TypeError(f"{code.co_filename}:{code.co_firstlineno}: {msg}")


def validate_check_function(func: Any) -> Check:  # type: ignore
    if not callable(func):
        raise TypeError("Check function must be callable")

    params = list(signature(func).parameters)

    if len(params) != 2:
        raise _located(func, "Check function must take 2 parameters")

    hints = get_type_hints(func)

    if hints.get(params[0]) is not Campaign:
        raise _located(func, '"campaign" param must be of type Campaign')

    if hints.get(params[1]) != list[VerificationReport]:
        raise _located(func, '"reports" param must be of type list[VerificationReport]')

    return func  # type: ignore[no-any-return]


def load_checks(settings: Settings) -> list[tuple[type[Identity], Check]]:
    found: list[tuple[type[Identity], Check]] = []

    for entry in discover(settings.load):
        if should_load_check(settings, entry.identity):
            if func := getattr(entry.module, "check", None):
                found.append((entry.identity, validate_check_function(func)))

    found.sort(key=lambda pair: (pair[0].prefix, pair[0].code))

    if settings.verbose:
        codes = [str(IdentityCode.from_identity(identity)) for identity, _ in found]

        print(f"Enabled identities: {', '.join(codes) or 'No identities enabled'}\n")

    return found
