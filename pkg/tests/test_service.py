"""The HTTP facade: payload shapes, validation, error mapping."""

import pytest
from fastapi.testclient import TestClient

from kh.service import create_app

HOPF = "X[1,4,2,3]; X[3,2,4,1]"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"schema": "kh/1", "status": "ok"}


def test_jones_endpoint(client):
    r = client.post("/jones", json={"diagram": "O"})
    assert r.status_code == 200
    body = r.json()
    assert body["schema"] == "kh/1"
    assert body["jones_J"] == "q^-1 + q"
    assert body["jones_V"] == "1"
    assert body["writhe"] == 0


def test_jones_rejects_garbage(client):
    r = client.post("/jones", json={"diagram": "X[1,2,3]"})
    assert r.status_code == 400
    assert "detail" in r.json()


def test_homology_routes_agree(client):
    direct = client.post("/homology", json={"diagram": HOPF}).json()
    nerve = client.post(
        "/homology", json={"diagram": HOPF, "route": "nerve"}
    ).json()
    assert direct["route"] == "direct"
    assert nerve["route"] == "nerve"
    assert direct["groups"] == nerve["groups"]
    assert direct["jones_J"] == nerve["jones_J"] == "q^-6 + q^-4 + q^-2 + 1"
    assert [(g["i"], g["j"]) for g in direct["groups"]] == [
        (-2, -6),
        (-2, -4),
        (0, -2),
        (0, 0),
    ]


def test_homology_rejects_unknown_route(client):
    r = client.post("/homology", json={"diagram": "O", "route": "sideways"})
    assert r.status_code == 422


def test_nerve_endpoint(client):
    r = client.post("/nerve", json={"n": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["n"] == 2
    assert body["truncation"] == 3
    assert body["nondegenerate"] == [7, 12, 6, 0]
    assert body["subdivision_cells"] == [7, 12, 6]
    assert body["theorem"]["agree"] is True


def test_nerve_bounds(client):
    assert client.post("/nerve", json={"n": 9}).status_code == 422
    assert client.post("/nerve", json={"n": -1}).status_code == 422


def test_doldkan_endpoint(client):
    payload = {"ranks": [1, 1], "boundaries": {"1": [[2]]}}
    r = client.post("/doldkan", json=payload)
    assert r.status_code == 200
    body = r.json()
    assert body["gamma_dims"] == [1, 2, 3, 4]
    assert body["homology"][0] == {"free_rank": 0, "torsion": [2]}
    assert body["homology_agrees"] is True
    assert body["roundtrip"]["ok"] is True
    assert body["roundtrip"]["divisors"] == [[2], [], []]


def test_doldkan_unnormalized_skips_roundtrip(client):
    payload = {
        "ranks": [1, 1],
        "boundaries": {"1": [[2]]},
        "normalized": False,
    }
    body = client.post("/doldkan", json=payload).json()
    assert body["roundtrip"] is None
    assert body["homology_agrees"] is True


def test_doldkan_shape_errors(client):
    bad = {"ranks": [1, 1], "boundaries": {"1": [[2, 2]]}}
    r = client.post("/doldkan", json=bad)
    assert r.status_code == 400
    assert "1x1" in r.json()["detail"]


def test_check_endpoint(client):
    r = client.post("/check", json={"fuzz": 2, "seed": 7, "only": "witness"})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert [c["name"] for c in body["checks"]] == ["witness"]


def test_check_rejects_unknown_task(client):
    r = client.post("/check", json={"fuzz": 2, "seed": 7, "only": "bogus"})
    assert r.status_code == 400
