from textwrap import dedent

from .loader import discover
from .settings import Settings


def explain(settings: Settings) -> str:
    lookup = settings.explain
    entry = next((x for x in discover(settings.load) if x.code == lookup), None)

    if entry is None:
        return f'alphakepler: Identity code "{lookup}" not found'

    identity = entry.identity

    if not identity.__doc__:
        return f'alphakepler: Explanation for "{lookup}" not found'

    categories = " ".join(f"[{x}]" for x in identity.categories)

    lines = [
        f"{lookup}: {identity.name or '<name unknown>'} {categories}",
        f"Tolerance: {identity.tol:g}",
        "",
        dedent(identity.__doc__).strip(),
    ]

    if settings.verbose:
        lines[:0] = [f"Filename: {entry.filename}", ""]

    return "\n".join(lines)
