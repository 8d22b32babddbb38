"""HTTP facade over the engine.

Every endpoint returns a JSON payload under schema kh/1.  Input problems
(unparseable diagrams, bad chain data, unknown check names) come back as
400 with a diagnostic; a check run that completes but finds violations is
still a 200 whose body says ok = false.
"""

from fastapi import FastAPI, HTTPException

from .bracket import bracket_A, bracket_q, jones_J, jones_V
from .categories import ModuleFunctor
from .checks import run_checks
from .diagrams import parse_pd
from .doldkan import gamma, roundtrip_check
from .homology import ChainComplex, HomologyGroup, homology, khovanov_report
from .laurent import Poly2
from .models import (
    CheckRequest,
    CheckResponse,
    DoldKanRequest,
    DoldKanResponse,
    HealthResponse,
    HomologyRequest,
    HomologyResponse,
    JonesRequest,
    JonesResponse,
    NerveRequest,
    NerveResponse,
)
from .nerve import (
    barycentric_subdivision,
    khovanov_homology_via_nerve,
    nerve,
    simplex_category,
    subdivision_theorem_check,
)
from .snf import IntMatrix


def jones_payload(text):
    d = parse_pd(text)
    return {
        "schema": "kh/1",
        "diagram": d.render(),
        "n_plus": d.n_plus,
        "n_minus": d.n_minus,
        "writhe": d.writhe,
        "bracket_A": bracket_A(d).render(),
        "bracket_q": bracket_q(d).render(),
        "jones_J": jones_J(d).render(),
        "jones_V": jones_V(d).render(),
    }


def homology_payload(text, route="direct"):
    d = parse_pd(text)
    if route == "direct":
        payload = khovanov_report(d)
    else:
        shifted = khovanov_homology_via_nerve(d)
        poincare = Poly2()
        groups = []
        for (i, j), g in sorted(shifted.items()):
            if not (g.free_rank or g.torsion):
                continue
            groups.append(
                {"i": i, "j": j, "free_rank": g.free_rank, "torsion": list(g.torsion)}
            )
            if g.free_rank:
                poincare = poincare.add_term(i, j, g.free_rank)
        payload = {
            "schema": "kh/1",
            "diagram": d.render(),
            "n_plus": d.n_plus,
            "n_minus": d.n_minus,
            "groups": groups,
            "poincare": poincare.render(),
            "jones_J": jones_J(d).render(),
        }
    payload["route"] = route
    return payload


def _constant_functor(C):
    one = IntMatrix.identity(1)
    return ModuleFunctor(C, {x: 1 for x in C.objects}, {f: one for f in C.morphisms})


def _group_entries(groups):
    return [{"free_rank": g.free_rank, "torsion": list(g.torsion)} for g in groups]


def nerve_payload(n, truncation=None):
    if truncation is None:
        truncation = n + 1
    C = simplex_category(n)
    S = nerve(C, truncation)
    sub = barycentric_subdivision(n)
    report = subdivision_theorem_check(n, _constant_functor(C))
    return {
        "schema": "kh/1",
        "n": n,
        "truncation": truncation,
        "nondegenerate": [len(S.nondegenerate(k)) for k in range(truncation + 1)],
        "subdivision_cells": [len(sub.cells(k)) for k in range(n + 1)],
        "theorem": {
            "agree": report.ok,
            "category": _group_entries(report.category),
            "subdivision": _group_entries(report.subdivision),
            "simplex": _group_entries(report.simplex),
            "mismatches": list(report.mismatches),
        },
    }


def _parse_complex(ranks, boundaries):
    ranks = tuple(int(r) for r in ranks)
    if not ranks:
        raise ValueError("need at least one rank")
    mats = {}
    for key, rows in boundaries.items():
        k = int(key)
        if not 1 <= k < len(ranks):
            raise ValueError("boundary degree %d outside 1..%d" % (k, len(ranks) - 1))
        if len(rows) != ranks[k - 1] or any(len(row) != ranks[k] for row in rows):
            raise ValueError(
                "boundary %d must be a %dx%d matrix" % (k, ranks[k - 1], ranks[k])
            )
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = int(v)
        mats[k] = IntMatrix(ranks[k - 1], ranks[k], entries)
    return ChainComplex(ranks, mats)


def doldkan_payload(ranks, boundaries, truncation=3, normalized=True):
    C = _parse_complex(ranks, boundaries)
    G = gamma(C, truncation, normalized=normalized)
    h_source = list(homology(C))
    payload = {
        "schema": "kh/1",
        "ranks": list(C.ranks),
        "truncation": truncation,
        "normalized": normalized,
        "gamma_dims": list(G.module.dims),
        "homology": _group_entries(h_source),
        "roundtrip": None,
    }
    if normalized:
        rep = roundtrip_check(C, truncation)
        payload["roundtrip"] = {
            "ok": rep.ok,
            "ranks": list(rep.ranks),
            "source_ranks": list(rep.source_ranks),
            "divisors": [list(d) for d in rep.divisors],
            "source_divisors": [list(d) for d in rep.source_divisors],
            "mismatches": list(rep.mismatches),
        }
        payload["homology_agrees"] = rep.ok
    else:
        h_gamma = homology(G.module.chain_complex())
        zero = HomologyGroup(0, ())
        agrees = True
        for k in range(truncation):
            want = h_source[k] if k < len(h_source) else zero
            got = h_gamma[k] if k < len(h_gamma) else zero
            if want != got:
                agrees = False
        payload["homology_agrees"] = agrees
    return payload


def create_app():
    app = FastAPI(title="kh", version="1.0.0")

    @app.get("/health", response_model=HealthResponse, response_model_by_alias=True)
    def health():
        return {"schema": "kh/1", "status": "ok"}

    @app.post("/jones", response_model=JonesResponse, response_model_by_alias=True)
    def jones(req: JonesRequest):
        try:
            return jones_payload(req.diagram)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))

    @app.post(
        "/homology", response_model=HomologyResponse, response_model_by_alias=True
    )
    def homology_route(req: HomologyRequest):
        try:
            return homology_payload(req.diagram, req.route)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))

    @app.post("/nerve", response_model=NerveResponse, response_model_by_alias=True)
    def nerve_route(req: NerveRequest):
        try:
            return nerve_payload(req.n, req.truncation)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))

    @app.post("/doldkan", response_model=DoldKanResponse, response_model_by_alias=True)
    def doldkan_route(req: DoldKanRequest):
        try:
            return doldkan_payload(
                req.ranks, req.boundaries, req.truncation, req.normalized
            )
        except (ValueError, RuntimeError) as e:
            raise HTTPException(status_code=400, detail=str(e))

    @app.post("/check", response_model=CheckResponse, response_model_by_alias=True)
    def check_route(req: CheckRequest):
        try:
            return run_checks(
                fuzz=req.fuzz,
                seed=req.seed,
                parallel=req.parallel,
                only=req.only,
                n=req.n,
            )
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))

    return app


app = create_app()
