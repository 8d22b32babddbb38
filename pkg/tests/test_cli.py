"""The command-line client: output shapes, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

import kh.cli as cli
from kh.cli import main

HOPF = "X[1,4,2,3]; X[3,2,4,1]"


@pytest.fixture()
def runner():
    return CliRunner()


def test_jones_unknot(runner):
    r = runner.invoke(main, ["jones", "-d", "O"])
    assert r.exit_code == 0
    assert r.output.splitlines()[0] == "J = q^-1 + q"


def test_jones_curl_normalizes_to_unknot(runner):
    r = runner.invoke(main, ["jones", "-d", "X[1,2,2,1]"])
    assert r.exit_code == 0
    assert r.output.splitlines()[0] == "J = q^-1 + q"
    assert "V = 1" in r.output


def test_jones_json_is_canonical(runner):
    a = runner.invoke(main, ["jones", "-d", HOPF, "--format", "json"])
    b = runner.invoke(main, ["jones", "-d", HOPF, "--format", "json"])
    assert a.exit_code == 0
    assert a.output == b.output
    body = json.loads(a.output)
    assert body["schema"] == "kh/1"
    assert body["jones_J"] == "q^-6 + q^-4 + q^-2 + 1"


def test_diagram_source_is_exactly_one(runner):
    neither = runner.invoke(main, ["jones"])
    assert neither.exit_code == 2
    both = runner.invoke(main, ["jones", "-d", "O", "-f", "x.txt"])
    assert both.exit_code == 2


def test_missing_file_is_an_input_error(runner):
    r = runner.invoke(main, ["jones", "-f", "/no/such/file.txt"])
    assert r.exit_code == 2
    assert "cannot read /no/such/file.txt" in r.stderr


def test_file_input_works(runner, tmp_path):
    p = tmp_path / "d.txt"
    p.write_text(HOPF + "\n")
    r = runner.invoke(main, ["jones", "-f", str(p)])
    assert r.exit_code == 0
    assert "q^-6 + q^-4 + q^-2 + 1" in r.output


def test_bad_diagram_is_an_input_error(runner):
    r = runner.invoke(main, ["jones", "-d", "X[1,2,3]"])
    assert r.exit_code == 2
    assert "input error" in r.stderr


def test_homology_text_and_latex(runner):
    text = runner.invoke(main, ["homology", "-d", HOPF])
    assert text.exit_code == 0
    assert "i=-2  j=-6   Z" in text.output
    assert "J = q^-6 + q^-4 + q^-2 + 1" in text.output
    latex = runner.invoke(main, ["homology", "-d", HOPF, "--format", "latex"])
    assert latex.exit_code == 0
    assert r"\begin{array}" in latex.output
    assert "q^{-6}" in latex.output


def test_homology_nerve_route_matches_direct(runner):
    a = runner.invoke(main, ["homology", "-d", HOPF, "--format", "json"])
    b = runner.invoke(
        main, ["homology", "-d", HOPF, "--route", "nerve", "--format", "json"]
    )
    assert a.exit_code == b.exit_code == 0
    da, db = json.loads(a.output), json.loads(b.output)
    assert da["groups"] == db["groups"]
    assert da["route"] == "direct" and db["route"] == "nerve"


def test_nerve_command(runner):
    r = runner.invoke(main, ["nerve", "-n", "2", "--format", "json"])
    assert r.exit_code == 0
    body = json.loads(r.output)
    assert body["nondegenerate"] == [7, 12, 6, 0]
    assert body["theorem"]["agree"] is True


def test_doldkan_default_and_inline(runner):
    r = runner.invoke(main, ["doldkan"])
    assert r.exit_code == 0
    inline = runner.invoke(
        main,
        ["doldkan", "-d", '{"ranks": [2, 2], "boundaries": {"1": [[2, 0], [0, 3]]}}'],
    )
    assert inline.exit_code == 0
    assert "Z/6" in inline.output


def test_doldkan_rejects_bad_json(runner):
    r = runner.invoke(main, ["doldkan", "-d", "{not json"])
    assert r.exit_code == 2


def test_check_json_is_deterministic_and_parallel_safe(runner):
    args = ["check", "--fuzz", "3", "--seed", "7", "--format", "json"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    c = runner.invoke(main, args + ["--parallel"])
    assert a.exit_code == b.exit_code == c.exit_code == 0
    assert a.output == b.output == c.output


def test_check_only_filter(runner):
    r = runner.invoke(
        main,
        ["check", "--fuzz", "2", "--seed", "7", "--only", "subdivision", "-n", "2"],
    )
    assert r.exit_code == 0
    assert "subdivision" in r.output


def test_check_failure_exits_one(runner, monkeypatch):
    fake = {
        "schema": "kh/1",
        "fuzz": 1,
        "seed": 1,
        "ok": False,
        "checks": [
            {"name": "identities", "status": "fail", "cases": 1, "detail": "boom"}
        ],
    }
    monkeypatch.setattr(cli, "_call", lambda url, path, payload: (200, fake))
    r = runner.invoke(main, ["check", "--fuzz", "1", "--seed", "1"])
    assert r.exit_code == 1


def test_nerve_mismatch_exits_one(runner, monkeypatch):
    fake = {
        "schema": "kh/1",
        "n": 1,
        "truncation": 2,
        "nondegenerate": [2, 1, 0],
        "subdivision_cells": [3, 2],
        "theorem": {"agree": False, "detail": "synthetic"},
    }
    monkeypatch.setattr(cli, "_call", lambda url, path, payload: (200, fake))
    r = runner.invoke(main, ["nerve", "-n", "1"])
    assert r.exit_code == 1


def test_serve_is_registered():
    assert "serve" in main.commands
    assert sorted(main.commands) == [
        "check",
        "doldkan",
        "homology",
        "jones",
        "nerve",
        "serve",
    ]
