"""Regenerate docs/identities.md from the docstrings of the built-in identities."""

import re
from pathlib import Path
from textwrap import dedent

from alphakepler.loader import IdentityModule, discover

HEADER = """\
<!--
Autogenerated! Do not modify!

Run `python docs/gen_checks.py` after adding or changing an identity.
-->

# Verified Identities

| Code | Name | Categories | Tolerance |
| ---- | ---- | ---------- | --------- |"""


def summary_row(entry: IdentityModule) -> str:
    identity = entry.identity
    categories = ", ".join(identity.categories)

    return f"| [{entry.code}](#{str(entry.code).lower()}) | `{identity.name}` | {categories} | `{identity.tol:g}` |"  # noqa: E501


def section(entry: IdentityModule) -> str:
    identity = entry.identity

    body = dedent(identity.__doc__ or "").strip()
    body = re.sub(r"```([\s\S]*?)```", r"```text\1```", body)

    return "\n\n".join([
        f"## {entry.code}",
        f"`{identity.name}`, tolerance `{identity.tol:g}`",
        body,
    ])


def main() -> None:
    entries = sorted(discover([]), key=lambda x: (x.code.prefix, x.code.id))

    text = "\n".join([HEADER, *map(summary_row, entries)])
    text += "".join(f"\n\n{section(entry)}" for entry in entries)

    (Path(__file__).parent / "identities.md").write_text(text + "\n")


if __name__ == "__main__":
    main()
