"""
Tests for the persisted record file and run manifest
"""

import math

import pytest

from config import Settings, settings
from errors import WorkbenchError
from results_store import ResultStore
from schemas.patterns import ForbiddenSpec
from schemas.records import EnumerationCensus, ExtremalRecord


def _record(n: int, token: str = "P4") -> ExtremalRecord:
    return ExtremalRecord(
        n=n,
        spec=ForbiddenSpec.parse(token),
        max_mu=math.sqrt(n - 1),
        witnesses=["C@"],
        census=EnumerationCensus(generated=3, admissible=3, selected=3, pruned=True),
    )


def test_manifest_requires_open(tmp_path):
    with pytest.raises(WorkbenchError):
        ResultStore(tmp_path).manifest


def test_append_and_load(tmp_path):
    store = ResultStore(tmp_path / "run")
    manifest = store.open({"orders": [4, 5]})
    assert manifest.app_version == settings.APP_VERSION
    assert manifest.tolerances["eigen"] == settings.EIGEN_TOLERANCE

    store.append(_record(4))
    store.append(_record(5))
    assert store.is_completed("4|P4|0")
    assert not store.is_completed("6|P4|0")
    assert [r.n for r in store.load_records()] == [4, 5]
    assert len(store.records_path.read_text().splitlines()) == 2


def test_resume_keeps_completed_cells(tmp_path):
    store = ResultStore(tmp_path)
    store.open({"orders": [4]})
    store.append(_record(4))

    resumed = ResultStore(tmp_path)
    manifest = resumed.open({"orders": [4, 5]}, resume=True)
    assert manifest.completed == ["4|P4|0"]
    assert manifest.parameters["orders"] == [4, 5]
    assert "4|P4|0" in manifest.census
    assert [r.n for r in resumed.load_records()] == [4]


def test_fresh_open_clears_previous_records(tmp_path):
    store = ResultStore(tmp_path)
    store.open({})
    store.append(_record(4))

    fresh = ResultStore(tmp_path)
    manifest = fresh.open({})
    assert manifest.completed == []
    assert fresh.load_records() == []


def test_resume_without_manifest_starts_fresh(tmp_path):
    store = ResultStore(tmp_path / "new")
    manifest = store.open({"orders": [3]}, resume=True)
    assert manifest.completed == []
    assert store.manifest_path.exists()


def test_default_directory_comes_from_settings(monkeypatch, tmp_path):
    monkeypatch.setattr(Settings, "RESULTS_DIR", str(tmp_path / "results"))
    assert ResultStore().directory == tmp_path / "results"
