"""FastAPI wiring around the pure handlers."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..dissect import DEFAULT_ENUMERATION_CAP
from ..embedding import NotBiconnected, NotOuterplanar
from ..graphs import DisconnectedGraph
from ..textio import ParseError
from ..witness import FaceTooLong
from . import handlers
from .schemas import (
    SCHEMA_VERSION,
    AnalysisOutput,
    AnalyzeRequest,
    BoundRequest,
    BoundResponse,
    EnumerateRequest,
    EnumerateResponse,
    GenerateRequest,
    GenerateResponse,
    QnReportModel,
    QnRequest,
    VerificationSummaryModel,
    VerifyRequest,
    WitnessCertificateModel,
    WitnessRequest,
)

app = FastAPI(
    title="outerplanar",
    description="Exact distance invariants, witness constructions and bound verification "
    "for 2-connected outerplanar graphs.",
    version="0.1.0",
)


def _domain(call, *args):
    try:
        return call(*args)
    except ParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except (NotBiconnected, NotOuterplanar, FaceTooLong, DisconnectedGraph) as exc:
        raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}") from exc
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "schema": SCHEMA_VERSION, "enumeration_cap": DEFAULT_ENUMERATION_CAP}


@app.post("/analyze", response_model=AnalysisOutput, response_model_by_alias=True)
def analyze(req: AnalyzeRequest) -> AnalysisOutput:
    return _domain(handlers.handle_analyze, req)


@app.post("/generate", response_model=GenerateResponse, response_model_by_alias=True)
def generate(req: GenerateRequest) -> GenerateResponse:
    return _domain(handlers.handle_generate, req)


@app.post("/witness", response_model=WitnessCertificateModel, response_model_by_alias=True)
def witness(req: WitnessRequest) -> WitnessCertificateModel:
    return _domain(handlers.handle_witness, req)


@app.post("/bound", response_model=BoundResponse, response_model_by_alias=True)
def bound(req: BoundRequest) -> BoundResponse:
    return _domain(handlers.handle_bound, req)


@app.post("/enumerate", response_model=EnumerateResponse, response_model_by_alias=True)
def enumerate_(req: EnumerateRequest) -> EnumerateResponse:
    return _domain(handlers.handle_enumerate, req)


@app.post("/verify", response_model=VerificationSummaryModel, response_model_by_alias=True)
def verify(req: VerifyRequest) -> VerificationSummaryModel:
    return _domain(handlers.handle_verify, req)


@app.post("/qn", response_model=QnReportModel, response_model_by_alias=True)
def qn(req: QnRequest) -> QnReportModel:
    return _domain(handlers.handle_qn, req)
