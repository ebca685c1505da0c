"""FastAPI application exposing the analysis, sweep, and circuit endpoints."""

from __future__ import annotations

import importlib.resources
import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..oracle import SizeCapError
from . import handlers
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    CircuitResponse,
    CorrelatorCircuitRequest,
    CorrelatorRequest,
    CorrelatorResponse,
    ErrorBudgetRequest,
    ErrorBudgetResponse,
    HealthResponse,
    SweepRequest,
    SweepResponse,
    UsquaredCircuitRequest,
)

app = FastAPI(
    title="graphstate",
    version=__version__,
    description=(
        "Geometry of Ising graph states: weight invariants, energy moments, "
        "velocity/curvature/torsion, shot-noise protocol simulation, and "
        "OpenQASM circuit emission."
    ),
)


@app.exception_handler(SizeCapError)
async def _size_cap_handler(request: Request, exc: SizeCapError) -> JSONResponse:
    return JSONResponse(status_code=413, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    # Covers graph validation, parse, zero-variance, and degenerate-fit errors.
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    return handlers.analyze(req)


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    return handlers.sweep(req)


@app.post("/sweep/csv", response_class=PlainTextResponse)
def sweep_csv(req: SweepRequest) -> PlainTextResponse:
    return PlainTextResponse(handlers.sweep_as_csv(req), media_type="text/csv")


@app.post("/correlator", response_model=CorrelatorResponse)
def correlator(req: CorrelatorRequest) -> CorrelatorResponse:
    return handlers.correlator(req)


@app.post("/error-budget", response_model=ErrorBudgetResponse)
def error_budget(req: ErrorBudgetRequest) -> ErrorBudgetResponse:
    return handlers.budget(req)


@app.post("/circuits/usquared", response_model=CircuitResponse)
def usquared_circuit(req: UsquaredCircuitRequest) -> CircuitResponse:
    return handlers.usquared_circuit(req)


@app.post("/circuits/correlator", response_model=CircuitResponse)
def correlator_circuit(req: CorrelatorCircuitRequest) -> CircuitResponse:
    return handlers.correlator_circuit(req)


@app.get("/schemas/analysis-output")
def analysis_output_schema() -> JSONResponse:
    text = importlib.resources.files("graphstate.schemas").joinpath(
        "analysis_output.schema.json").read_text(encoding="utf-8")
    return JSONResponse(content=json.loads(text))
