"""CSV loading against the documented simulator schemas.

The column lists below are the interface contract with the simulator;
they are checked verbatim so that a schema drift fails loudly with the
offending column named.
"""

from __future__ import annotations

import csv
import os

SCHEMAS = {
    "spectrum": ["f", "w", "L", "boundary", "index", "re_E", "im_E"],
    "singulars": ["f", "w", "L", "sign", "index", "s"],
    "winding": ["f", "w", "V1_raw", "V1", "V2_raw", "V2", "flag"],
    "realspace_winding": ["d", "realization", "sign", "raw", "value"],
    "disorder": ["d", "realization", "zero_mode_dev", "pi_mode_dev", "wipr"],
    "boundaries": ["axis", "value", "gap_type"],
}

_STRING_COLUMNS = {"boundary", "sign", "flag", "axis", "gap_type"}


class SchemaError(ValueError):
    """A CSV does not match the documented schema."""


def read_table(directory: str, name: str) -> list[dict]:
    """Read one named table, validating its header exactly.

    Numeric cells are converted to float (int-valued ones to int); empty
    cells become None.
    """
    expected = SCHEMAS[name]
    path = os.path.join(directory, f"{name}.csv")
    if not os.path.exists(path):
        raise SchemaError(f"missing input table: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path} is empty (expected header {expected})")
        missing = [c for c in expected if c not in header]
        if missing:
            raise SchemaError(f"{path} is missing column {missing[0]!r}")
        if header != expected:
            raise SchemaError(f"{path} header {header} != expected {expected}")
        rows = []
        for raw in reader:
            row = {}
            for col, cell in zip(header, raw):
                if col in _STRING_COLUMNS:
                    row[col] = cell
                elif cell == "":
                    row[col] = None
                else:
                    value = float(cell)
                    row[col] = int(value) if value.is_integer() and col in ("L", "index", "realization", "V1", "V2", "value") else value
            rows.append(row)
    return rows
