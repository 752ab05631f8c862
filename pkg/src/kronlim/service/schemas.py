"""Pydantic request/response models for the evaluation service."""

from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class PointSpec(BaseModel):
    """JSON form of a half-plane point: {"n": 3, "y": [...], "x": {"1,2": v}}."""

    n: int = Field(ge=2)
    y: List[float]
    x: Dict[str, float] = Field(default_factory=dict)


class TruncationOptions(BaseModel):
    lattice_radius: int = 120
    tail_threshold: float = 1e-14
    m1_max: int = 64


class EvalRequest(BaseModel):
    point: PointSpec
    s: float
    method: Literal["direct", "fast", "primitive"] = "fast"
    radius: Optional[int] = None
    tail: Optional[float] = None
    qtol: Optional[float] = None


class EvalReport(BaseModel):
    method: str
    n: int
    s: float
    value: float
    truncation: TruncationOptions
    estimated_error: float
    wall_time_ms: float


class LaurentRequest(BaseModel):
    point: PointSpec
    series: Literal["estar", "eprime"]


class LaurentReport(BaseModel):
    series: str
    n: int
    pole_coefficient: float
    constant_term: float


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 0


class VerifyCase(BaseModel):
    case: str
    error: float
    tolerance: float
    passed: bool


class VerifyReport(BaseModel):
    suite: str
    seed: int
    passed: bool
    max_error: float
    cases: List[VerifyCase]
