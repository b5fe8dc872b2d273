from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

import numpy as np
import numpy.typing as npt

CSV_FORMAT = "%.17g"


def write_csv(path: Path, header: Sequence[str], rows: npt.ArrayLike) -> Path:
    table = np.atleast_2d(np.asarray(rows, dtype=float))

    if table.shape[1] != len(header):
        raise ValueError(
            f"alphakepler: {len(header)} column name(s) for {table.shape[1]} column(s)"
        )

    path.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(path, table, fmt=CSV_FORMAT, delimiter=",", header=",".join(header), comments="")

    return path


def dumps(data: object) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def write_json(path: Path, data: object) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data))

    return path
