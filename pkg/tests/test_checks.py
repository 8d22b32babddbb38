"""The self-verification harness: task list, determinism, crash handling."""

import json

import pytest

import kh.checks as checks
from kh.checks import TASK_NAMES, checks_json, checks_text, run_checks

EXPECTED_ORDER = [
    "identities",
    "d_squared",
    "euler_jones",
    "reidemeister",
    "subdivision",
    "doldkan",
    "bg",
    "witness",
    "moore",
    "dual_route",
]


def test_task_names_and_order():
    assert list(TASK_NAMES) == EXPECTED_ORDER


def test_small_run_is_green():
    report = run_checks(fuzz=4, seed=7)
    assert report["schema"] == "kh/1"
    assert report["fuzz"] == 4 and report["seed"] == 7
    assert report["ok"] is True
    assert [c["name"] for c in report["checks"]] == EXPECTED_ORDER
    for c in report["checks"]:
        assert c["status"] == "ok"
        assert c["cases"] >= 1
        assert c["detail"]


def test_serial_and_parallel_render_identically():
    a = checks_json(run_checks(fuzz=4, seed=11, parallel=False))
    b = checks_json(run_checks(fuzz=4, seed=11, parallel=True))
    assert a == b
    assert a.endswith("\n")
    parsed = json.loads(a)
    assert parsed["ok"] is True


def test_only_filter():
    report = run_checks(fuzz=3, seed=7, only="witness")
    assert [c["name"] for c in report["checks"]] == ["witness"]
    with pytest.raises(ValueError, match="unknown check"):
        run_checks(fuzz=3, seed=7, only="nonsense")


def test_subdivision_accepts_degree_cap():
    report = run_checks(fuzz=3, seed=7, only="subdivision", n=2)
    (entry,) = report["checks"]
    assert entry["status"] == "ok"


def test_crashing_task_reports_failure(monkeypatch):
    def boom(fuzz, seed, n=None):
        raise ZeroDivisionError("synthetic crash")

    monkeypatch.setattr(checks, "_TASKS", (("boom", boom),))
    report = checks.run_checks(fuzz=2, seed=1)
    assert report["ok"] is False
    (entry,) = report["checks"]
    assert entry["status"] == "fail"
    assert "ZeroDivisionError" in entry["detail"]


def test_text_rendering_lists_every_check():
    report = run_checks(fuzz=3, seed=7)
    text = checks_text(report)
    for name in EXPECTED_ORDER:
        assert name in text
    assert "ok" in text
