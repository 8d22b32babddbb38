"""Request and response shapes for the service, schema kh/1."""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class JonesRequest(BaseModel):
    diagram: str


class HomologyRequest(BaseModel):
    diagram: str
    route: Literal["direct", "nerve"] = "direct"


class NerveRequest(BaseModel):
    n: int = Field(ge=0, le=3)
    truncation: Optional[int] = Field(default=None, ge=0)


class DoldKanRequest(BaseModel):
    ranks: list[int]
    boundaries: dict[str, list[list[int]]] = {}
    truncation: int = Field(default=3, ge=0, le=4)
    normalized: bool = True


class CheckRequest(BaseModel):
    fuzz: int = Field(default=50, ge=1)
    seed: int = 7
    parallel: bool = False
    only: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1, le=3)


class JonesResponse(BaseModel):
    schema_: str = Field(alias="schema")
    diagram: str
    n_plus: int
    n_minus: int
    writhe: int
    bracket_A: str
    bracket_q: str
    jones_J: str
    jones_V: str

    model_config = {"populate_by_name": True}


class GroupEntry(BaseModel):
    i: int
    j: int
    free_rank: int
    torsion: list[int]


class HomologyResponse(BaseModel):
    schema_: str = Field(alias="schema")
    diagram: str
    route: str
    n_plus: int
    n_minus: int
    groups: list[GroupEntry]
    poincare: str
    jones_J: str

    model_config = {"populate_by_name": True}


class DegreeGroup(BaseModel):
    free_rank: int
    torsion: list[int]


class ThreeWayReport(BaseModel):
    agree: bool
    category: list[DegreeGroup]
    subdivision: list[DegreeGroup]
    simplex: list[DegreeGroup]
    mismatches: list[str]


class NerveResponse(BaseModel):
    schema_: str = Field(alias="schema")
    n: int
    truncation: int
    nondegenerate: list[int]
    subdivision_cells: list[int]
    theorem: ThreeWayReport

    model_config = {"populate_by_name": True}


class RoundtripPayload(BaseModel):
    ok: bool
    ranks: list[int]
    source_ranks: list[int]
    divisors: list[list[int]]
    source_divisors: list[list[int]]
    mismatches: list[str]


class DoldKanResponse(BaseModel):
    schema_: str = Field(alias="schema")
    ranks: list[int]
    truncation: int
    normalized: bool
    gamma_dims: list[int]
    homology: list[DegreeGroup]
    homology_agrees: bool
    roundtrip: Optional[RoundtripPayload] = None

    model_config = {"populate_by_name": True}


class CheckEntry(BaseModel):
    name: str
    status: str
    cases: int
    detail: str


class CheckResponse(BaseModel):
    schema_: str = Field(alias="schema")
    fuzz: int
    seed: int
    ok: bool
    checks: list[CheckEntry]

    model_config = {"populate_by_name": True}


class HealthResponse(BaseModel):
    schema_: str = Field(alias="schema")
    status: str

    model_config = {"populate_by_name": True}
