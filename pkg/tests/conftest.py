import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lexdiv import fixtures
from lexdiv.ingest import merge
from lexdiv.store import Database


@pytest.fixture
def f1():
    return fixtures.fixture_f1()


@pytest.fixture
def f1_db():
    return fixtures.f1_store()


@pytest.fixture
def f1_f2_db():
    return fixtures.f1_f2_store()


@pytest.fixture
def f1_data_dir(tmp_path):
    path = tmp_path / "f1"
    fixtures.write_data_dir(fixtures.fixture_f1(), path)
    return path


@pytest.fixture
def f1_f2_data_dir(tmp_path):
    path = tmp_path / "f1f2"
    fixtures.write_data_dir(fixtures.fixture_f1_f2(), path)
    return path


def merged(*batches) -> Database:
    db = Database()
    for batch in batches:
        merge(batch, db)
    return db
