"""FastAPI service wrapping the core package.

Run with ``uvicorn majcoh.service:app``.  Domain data that fails
validation (bad norms, shapes, grids) maps to 400; transformations
refused by majorization map to 409.  The service uses the default
tolerances.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import schemas, serialize
from .absorption import IncoherentTarget, absorb_channel
from .catalysis import CatalysisQuery, catalysis_necessary, search_catalyst
from .channels import apply, completeness_residual, is_incoherent
from .majorization import compare
from .measures import Observable, c_l, check_monotone_violation, skew_information
from .synthesis import NotMajorizedError, plan_synthesis

app = FastAPI(
    title="majcoh",
    description="Pure-state coherence transformations under incoherent "
                "operations, decided and constructed via majorization.",
    version="0.1.0",
)


def _bad_request(exc: ValueError) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check", response_model=schemas.CheckResponse)
def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
    try:
        x = serialize.profile_from_json(req.x)
        y = serialize.profile_from_json(req.y)
        return schemas.CheckResponse(result=compare(x, y).value)
    except ValueError as exc:
        raise _bad_request(exc)


@app.post("/synthesize", response_model=schemas.SynthesizeResponse)
def synthesize_endpoint(req: schemas.SynthesizeRequest) -> schemas.SynthesizeResponse:
    try:
        psi = serialize.state_from_json(req.psi.model_dump())
        phi = serialize.state_from_json(req.phi.model_dump())
    except ValueError as exc:
        raise _bad_request(exc)
    try:
        plan = plan_synthesis(psi, phi)
    except NotMajorizedError as exc:
        raise HTTPException(status_code=409, detail=f"NotMajorized: {exc}")
    return schemas.SynthesizeResponse(
        channel=schemas.ChannelDoc(**serialize.channel_to_json(plan.to_channel())),
        plan=schemas.PlanDoc(**serialize.plan_to_json(plan)),
    )


@app.post("/apply", response_model=schemas.ApplyResponse)
def apply_endpoint(req: schemas.ApplyRequest) -> schemas.ApplyResponse:
    try:
        ch = serialize.channel_from_json(req.channel.model_dump())
        rho = serialize.density_from_json(req.state.model_dump())
        out = apply(ch, rho)
    except ValueError as exc:
        raise _bad_request(exc)
    return schemas.ApplyResponse(output=schemas.DensityDoc(**serialize.density_to_json(out)))


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify_endpoint(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    try:
        kraus = serialize.kraus_from_json(req.channel.model_dump())
    except ValueError as exc:
        raise _bad_request(exc)
    residual = completeness_residual(kraus)
    return schemas.VerifyResponse(
        incoherent=is_incoherent(kraus),
        complete=residual <= serialize.DEFAULT_TOL.complete_tol,
        completeness_residual=residual,
    )


@app.post("/catalyze", response_model=schemas.CatalyzeResponse)
def catalyze_endpoint(req: schemas.CatalyzeRequest) -> schemas.CatalyzeResponse:
    try:
        x = serialize.profile_from_json(req.source)
        y = serialize.profile_from_json(req.target)
        query = CatalysisQuery(source=x, target=y, catalyst_dim=req.catalyst_dim,
                               grid_step=req.grid_step)
        found = search_catalyst(query)
        necessary = catalysis_necessary(x, y)
    except ValueError as exc:
        raise _bad_request(exc)
    return schemas.CatalyzeResponse(
        catalyst=None if found is None else serialize.profile_to_json(found),
        certified_impossible=not necessary,
    )


@app.post("/measure/cl", response_model=schemas.MeasureResponse)
def measure_cl(req: schemas.TailMeasureRequest) -> schemas.MeasureResponse:
    try:
        state = serialize.state_from_json(req.state.model_dump())
        return schemas.MeasureResponse(value=c_l(state, req.l))
    except ValueError as exc:
        raise _bad_request(exc)


@app.post("/measure/skew", response_model=schemas.MeasureResponse)
def measure_skew(req: schemas.SkewMeasureRequest) -> schemas.MeasureResponse:
    try:
        rho = serialize.density_from_json(req.state.model_dump())
        k = Observable(serialize.observable_matrix_from_json(req.observable.model_dump()))
        return schemas.MeasureResponse(value=skew_information(rho, k))
    except ValueError as exc:
        raise _bad_request(exc)


@app.get("/counterexample", response_model=schemas.CounterexampleResponse)
def counterexample() -> schemas.CounterexampleResponse:
    return schemas.CounterexampleResponse(**check_monotone_violation().to_dict())


@app.post("/absorb", response_model=schemas.AbsorbResponse)
def absorb_endpoint(req: schemas.AbsorbRequest) -> schemas.AbsorbResponse:
    try:
        rho = serialize.density_from_json(req.rho.model_dump())
        target = IncoherentTarget(serialize.profile_from_json(req.sigma))
        if target.dim != rho.dim:
            raise ValueError(f"sigma: target has dim {target.dim}, state has dim {rho.dim}")
        ch = absorb_channel(target, rho.dim)
        out = apply(ch, rho)
    except ValueError as exc:
        raise _bad_request(exc)
    return schemas.AbsorbResponse(
        channel=schemas.ChannelDoc(**serialize.channel_to_json(ch)),
        output=schemas.DensityDoc(**serialize.density_to_json(out)),
    )
