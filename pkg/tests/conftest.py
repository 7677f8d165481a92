import pathlib

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def iris_path() -> pathlib.Path:
    return DATA_DIR / "iris.csv"


@pytest.fixture
def d1_csv(tmp_path) -> pathlib.Path:
    from helpers import d1_csv_text

    path = tmp_path / "d1.csv"
    path.write_text(d1_csv_text())
    return path
