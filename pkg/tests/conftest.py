from __future__ import annotations

import pytest

from clusterposet.config import CONFIG_ENV, reset_config
from clusterposet.quiver import Quiver
from clusterposet.quiverstore import QuiverStore


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """
    Point the config at a throwaway file under tmp_path for every test.
    """
    config_file = tmp_path / "config.ini"
    config_file.write_text("[verify]\nworkers = 2\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV, str(config_file))
    reset_config()
    QuiverStore.force_reload()
    yield config_file
    reset_config()


@pytest.fixture
def linear_a3() -> Quiver:
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3")))


@pytest.fixture
def alternating_a3() -> Quiver:
    return Quiver(("1", "2", "3"), (("1", "2"), ("3", "2")))


@pytest.fixture
def a1() -> Quiver:
    return Quiver(("1",))


@pytest.fixture
def linear_a2() -> Quiver:
    return Quiver(("1", "2"), (("1", "2"),))


@pytest.fixture
def d4() -> Quiver:
    return Quiver(("1", "2", "3", "4"), (("1", "2"), ("2", "3"), ("2", "4")))
