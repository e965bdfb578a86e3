"""Pydantic request/response models for the HTTP service.

The field layouts mirror the JSON wire formats of the file-based
interfaces, so documents accepted by the CLI are accepted verbatim by the
endpoints.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

ComplexPair = Tuple[float, float]
MatrixRows = List[List[ComplexPair]]


class StateDoc(BaseModel):
    dim: int
    amplitudes: List[ComplexPair]


class DensityDoc(BaseModel):
    dim: int
    rows: MatrixRows


class ChannelDoc(BaseModel):
    dim_in: int
    dim_out: int
    kraus: List[MatrixRows]


class TTransformDoc(BaseModel):
    i: int
    j: int
    t: float


class PlanDoc(BaseModel):
    chain: List[TTransformDoc]
    pre_unitary: MatrixRows
    post_unitary: MatrixRows


class CheckRequest(BaseModel):
    x: List[float] = Field(description="probability profile")
    y: List[float] = Field(description="probability profile")


class CheckResponse(BaseModel):
    result: str


class SynthesizeRequest(BaseModel):
    psi: StateDoc
    phi: StateDoc


class SynthesizeResponse(BaseModel):
    channel: ChannelDoc
    plan: PlanDoc


class ApplyRequest(BaseModel):
    channel: ChannelDoc
    state: DensityDoc


class ApplyResponse(BaseModel):
    output: DensityDoc


class VerifyRequest(BaseModel):
    channel: ChannelDoc


class VerifyResponse(BaseModel):
    incoherent: bool
    complete: bool
    completeness_residual: float


class CatalyzeRequest(BaseModel):
    source: List[float]
    target: List[float]
    catalyst_dim: int = 2
    grid_step: float = 0.01


class CatalyzeResponse(BaseModel):
    catalyst: Optional[List[float]]
    certified_impossible: bool


class TailMeasureRequest(BaseModel):
    state: StateDoc
    l: int


class SkewMeasureRequest(BaseModel):
    state: DensityDoc
    observable: DensityDoc  # same row layout; Hermitian, not necessarily a state


class MeasureResponse(BaseModel):
    value: float


class CounterexampleResponse(BaseModel):
    majorized: bool
    skew_before: float
    skew_after: float
    violation: bool
    cl_before: Dict[int, float]
    cl_after: Dict[int, float]
    cl_all_decreased: bool
    channel_incoherent: bool
    completeness_residual: float
    output_fidelity: float


class AbsorbRequest(BaseModel):
    rho: DensityDoc
    sigma: List[float] = Field(description="target eigenvalue profile")


class AbsorbResponse(BaseModel):
    channel: ChannelDoc
    output: DensityDoc
