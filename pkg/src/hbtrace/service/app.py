"""FastAPI application wrapping the core computations."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    DomainError,
    HbTraceError,
    InvariantViolationError,
    ParseError,
    ResourceCapError,
)
from . import handlers, models

ERROR_STATUS = {
    "parse": 400,
    "resource": 413,
    "domain": 422,
    "invariant": 500,
    "internal": 500,
}


def error_kind(exc: HbTraceError) -> str:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, ResourceCapError):
        return "resource"
    if isinstance(exc, DomainError):
        return "domain"
    if isinstance(exc, InvariantViolationError):
        return "invariant"
    return "internal"


def create_app() -> FastAPI:
    app = FastAPI(title="hbtrace", version=__version__)

    @app.exception_handler(HbTraceError)
    async def _handle_library_error(request: Request, exc: HbTraceError):
        kind = error_kind(exc)
        body = models.ErrorResponse(
            error=models.ErrorBody(kind=kind, message=str(exc))
        )
        return JSONResponse(status_code=ERROR_STATUS[kind], content=body.model_dump())

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/v1/decompose", response_model=models.DecomposeResponse)
    def decompose(req: models.IdealRequest):
        return handlers.decompose(req)

    @app.post("/v1/height", response_model=models.HeightResponse)
    def height(req: models.IdealRequest):
        return handlers.height_of(req)

    @app.post("/v1/polarize", response_model=models.PolarizeResponse)
    def polarize(req: models.IdealRequest):
        return handlers.polarize_ideal(req)

    @app.post("/v1/dual", response_model=models.DualResponse)
    def dual(req: models.IdealRequest):
        return handlers.dual_ideal(req)

    @app.post("/v1/localize", response_model=models.LocalizeResponse)
    def localize(req: models.LocalizeRequest):
        return handlers.localize_ideal(req)

    @app.post("/v1/graph", response_model=models.GraphResponse)
    def graph(req: models.GraphRequest):
        return handlers.graph_report(req)

    @app.post("/v1/is-cm", response_model=models.IsCmResponse)
    def is_cm(req: models.IdealRequest):
        return handlers.is_cm(req)

    @app.post("/v1/betti", response_model=models.BettiResponse)
    def betti(req: models.IdealRequest):
        return handlers.betti_table(req)

    @app.post("/v1/hb-matrix", response_model=models.HbMatrixResponse)
    def hb_matrix(req: models.IdealRequest):
        return handlers.hb_matrix(req)

    @app.post("/v1/trace", response_model=models.TraceResponse)
    def trace(req: models.IdealRequest):
        return handlers.trace(req)

    @app.post("/v1/classify", response_model=models.ClassifyResponse)
    def classify(req: models.IdealRequest):
        return handlers.classify(req)

    @app.post("/v1/verify-kernel-xy", response_model=models.VerifyResponse)
    def verify_kernel_xy(req: models.VerifyRequest):
        return handlers.verify_kernel_xy(req)

    @app.post("/v1/verify-inclusion", response_model=models.VerifyResponse)
    def verify_inclusion(req: models.VerifyRequest):
        return handlers.verify_inclusion_cmd(req)

    @app.post("/v1/verify-conjecture", response_model=models.VerifyResponse)
    def verify_conjecture(req: models.VerifyRequest):
        return handlers.verify_conjecture_cmd(req)

    @app.post("/v1/sweep", response_model=models.SweepResponse)
    def sweep(req: models.SweepRequest):
        return handlers.sweep(req)

    return app


app = create_app()
