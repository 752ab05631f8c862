"""FastAPI front end wrapping the evaluation library.

Domain violations (divergent s, poles, bad shapes) map to HTTP 400 with a
machine-readable code; malformed payloads are FastAPI's usual 422.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import eisenstein as ei
from ..errors import ConvergenceError, DomainError, KronlimError, PoleError, ShapeError
from ..halfplane import make_point
from ..specfun import QuadratureSpec
from ..verify import run_suite
from .schemas import (
    EvalReport,
    EvalRequest,
    LaurentReport,
    LaurentRequest,
    PointSpec,
    TruncationOptions,
    VerifyReport,
    VerifyRequest,
)

app = FastAPI(title="kronlim", description="Eisenstein series evaluation service")


@app.exception_handler(KronlimError)
async def _kronlim_error(request: Request, exc: KronlimError):
    if isinstance(exc, PoleError):
        code = "pole"
    elif isinstance(exc, (DomainError, ShapeError)):
        code = "domain"
    elif isinstance(exc, ConvergenceError):
        code = "convergence"
    else:
        code = "error"
    return JSONResponse(status_code=400, content={"code": code, "message": str(exc)})


def _build_point(spec: PointSpec):
    return make_point(spec.n, dict(spec.x), tuple(spec.y))


def _specs(req: EvalRequest):
    trunc = ei.TruncationSpec(
        lattice_radius=req.radius if req.radius is not None else 120,
        tail_threshold=req.tail if req.tail is not None else 1e-14,
        m1_max=64,
    )
    quad = QuadratureSpec(
        relative_tolerance=req.qtol if req.qtol is not None else 1e-12,
    )
    return trunc, quad


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/eval", response_model=EvalReport)
def eval_series(req: EvalRequest) -> EvalReport:
    point = _build_point(req.point)
    trunc, quad = _specs(req)
    start = time.perf_counter()
    if req.method == "direct":
        value = ei.e_star_direct(point, req.s, trunc)
        err = ei.completion_prefactor(point.n, req.s) * ei.direct_tail_bound(
            point, req.s, trunc.lattice_radius
        )
    elif req.method == "primitive":
        value = ei.e_primitive_direct(point, req.s, trunc)
        err = ei.direct_tail_bound(point, req.s, trunc.lattice_radius)
    else:
        value = ei.e_star_fast(point, req.s, trunc, quad)
        err = trunc.tail_threshold + quad.relative_tolerance * abs(value)
    wall_ms = (time.perf_counter() - start) * 1e3
    return EvalReport(
        method=req.method,
        n=point.n,
        s=req.s,
        value=value,
        truncation=TruncationOptions(
            lattice_radius=trunc.lattice_radius,
            tail_threshold=trunc.tail_threshold,
            m1_max=trunc.m1_max,
        ),
        estimated_error=err,
        wall_time_ms=wall_ms,
    )


@app.post("/laurent", response_model=LaurentReport)
def laurent(req: LaurentRequest) -> LaurentReport:
    point = _build_point(req.point)
    tag = ei.SeriesTag(req.series)
    data = ei.laurent_at_1(point, tag)
    return LaurentReport(
        series=req.series,
        n=point.n,
        pole_coefficient=data.pole_coefficient,
        constant_term=data.constant_term,
    )


@app.post("/verify", response_model=VerifyReport)
def verify(req: VerifyRequest) -> VerifyReport:
    cases, passed, max_error = run_suite(req.suite, req.seed)
    return VerifyReport(
        suite=req.suite, seed=req.seed, passed=passed, max_error=max_error, cases=cases
    )
