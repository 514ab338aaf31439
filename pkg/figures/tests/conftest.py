import os

import pytest

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def regime_dir():
    return os.path.join(DATA, "regime_regression")


@pytest.fixture
def diagram_dir():
    return os.path.join(DATA, "phase_diagram")


@pytest.fixture
def empty_tables_dir(tmp_path):
    """Directory with header-only CSVs for every table."""
    from floqssh_figures.io import SCHEMAS

    for name, cols in SCHEMAS.items():
        (tmp_path / f"{name}.csv").write_text(",".join(cols) + "\n")
    return str(tmp_path)
