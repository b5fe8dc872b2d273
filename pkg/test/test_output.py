import json
from pathlib import Path

import numpy as np
import pytest

from alphakepler.output import dumps, write_csv, write_json


def test_write_csv_header_and_precision(tmp_path: Path) -> None:
    path = write_csv(tmp_path / "nested" / "table.csv", ("t", "x"), [[0.0, 1 / 3], [1.0, 2.0]])

    lines = path.read_text().splitlines()

    assert lines[0] == "t,x"
    assert lines[1] == "0,0.33333333333333331"
    assert lines[2] == "1,2"


def test_write_csv_single_row(tmp_path: Path) -> None:
    path = write_csv(tmp_path / "row.csv", ("a", "b", "c"), [1.0, 2.0, 3.0])

    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)

    np.testing.assert_array_equal(table, [[1.0, 2.0, 3.0]])


def test_write_csv_rejects_mismatched_header(tmp_path: Path) -> None:
    msg = "alphakepler: 3 column name\\(s\\) for 2 column\\(s\\)"

    with pytest.raises(ValueError, match=msg):
        write_csv(tmp_path / "bad.csv", ("a", "b", "c"), [[1.0, 2.0]])


def test_dumps_is_sorted_and_newline_terminated() -> None:
    text = dumps({"b": 1, "a": [1, 2]})

    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')


def test_write_json(tmp_path: Path) -> None:
    path = write_json(tmp_path / "out" / "summary.json", {"pass": True})

    assert json.loads(path.read_text()) == {"pass": True}
