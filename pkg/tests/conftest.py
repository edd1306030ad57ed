from __future__ import annotations

import pytest

from util import context6_db, sample12_db, sample12_fimi_text


@pytest.fixture(scope="session")
def sample12():
    return sample12_db()


@pytest.fixture(scope="session")
def sample12_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "sample12.dat"
    path.write_text(sample12_fimi_text(), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def context6():
    return context6_db()
