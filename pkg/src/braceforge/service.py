"""HTTP front end over the classification engine.

Thin FastAPI layer: requests name a group (preset spec or raw Cayley
table), responses carry the same JSON payloads the CLI writes.  All
computation lives in the core package; results are deterministic, so
responses are cacheable by any client.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .errors import (
    BadCaseParamsError,
    BadSpecError,
    BraceforgeError,
    GroupTableError,
    OrderTooLargeForOracleError,
    UnsupportedOrderError,
)
from .groups import FiniteGroup, group_from_table, preset_group
from .partitions import build_report
from .pq import verify_pq
from .subgroups import direct_enumerate_oracle, enumerate_regular_gstable

app = FastAPI(
    title="braceforge",
    version=__version__,
    description="regular stable subgroup and skew brace classification",
)


class CayleyTable(BaseModel):
    order: int
    table: list[list[int]]
    label: str = ""


class GroupRequest(BaseModel):
    group: str | None = Field(default=None, description="preset spec, e.g. cyclic:6")
    table: CayleyTable | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if bool(self.group) == bool(self.table is not None):
            raise ValueError("provide exactly one of 'group' or 'table'")
        return self


class EnumerateRequest(GroupRequest):
    with_oracle: bool = False
    jobs: int = 1


class SubgroupModel(BaseModel):
    base: str
    elements: list[list[int]]


class EnumerateResponse(BaseModel):
    group: str
    order: int
    count: int
    subgroups: list[SubgroupModel]
    oracle_agrees: bool | None = None


class ClassifyRequest(GroupRequest):
    jobs: int = 1


class ClassifyResponse(BaseModel):
    report: dict
    all_laws_pass: bool


class PqVerifyRequest(BaseModel):
    p: int
    q: int
    g: int | None = None
    jobs: int = 1


class PqVerifyResponse(BaseModel):
    result: dict
    all_passed: bool


def _build_group(req: GroupRequest) -> FiniteGroup:
    if req.group:
        return preset_group(req.group)
    return group_from_table(req.table.order, req.table.table, req.table.label)


def _as_http_error(exc: Exception) -> HTTPException:
    if isinstance(exc, (UnsupportedOrderError, OrderTooLargeForOracleError)):
        return HTTPException(status_code=422, detail=str(exc))
    if isinstance(exc, (BadSpecError, BadCaseParamsError, GroupTableError)):
        return HTTPException(status_code=400, detail=str(exc))
    if isinstance(exc, BraceforgeError):
        return HTTPException(status_code=400, detail=str(exc))
    raise exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    try:
        G = _build_group(req)
        subs = enumerate_regular_gstable(G, jobs=req.jobs)
        oracle_agrees = None
        if req.with_oracle:
            oracle = direct_enumerate_oracle(G)
            oracle_agrees = [N.elements for N in subs] == [N.elements for N in oracle]
    except BraceforgeError as exc:
        raise _as_http_error(exc) from exc
    return EnumerateResponse(
        group=G.label,
        order=G.order,
        count=len(subs),
        subgroups=[SubgroupModel(**N.to_json()) for N in subs],
        oracle_agrees=oracle_agrees,
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: ClassifyRequest) -> ClassifyResponse:
    try:
        G = _build_group(req)
        report = build_report(G, jobs=req.jobs)
    except BraceforgeError as exc:
        raise _as_http_error(exc) from exc
    return ClassifyResponse(report=report.to_json(), all_laws_pass=report.all_laws_pass)


@app.post("/pq-verify", response_model=PqVerifyResponse)
def pq_verify_endpoint(req: PqVerifyRequest) -> PqVerifyResponse:
    try:
        verification = verify_pq(req.p, req.q, req.g, jobs=req.jobs)
    except BraceforgeError as exc:
        raise _as_http_error(exc) from exc
    return PqVerifyResponse(result=verification.to_json(), all_passed=verification.all_passed)
