"""HTTP facade over the engine for the analyst workbench.

Endpoints
---------
POST /api/scenario/solve     scenario JSON -> equilibrium report
POST /api/scenario/compare   {base, variant} -> side-by-side + deltas
POST /api/scenario/fcf       scenario JSON -> FCF percentile bands + samples
POST /api/scenario/maxdebt   scenario JSON -> job id (async)
GET  /api/scenario/curves    ?preset=case-a -> curve arrays
GET  /api/jobs/{job_id}      poll an async job
GET  /api/presets            preset names + normalized configs

Numbers are produced by the same engine as the CLI under the same config,
so the two agree bit-for-bit.  Invalid configs return 400 with the field
path; a no-equilibrium verdict is a normal 200 response.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .config import PRESETS, load_preset, scenario_from_dict
from .engine import (
    EnsembleCache,
    compare_scenarios,
    compare_to_dict,
    fcf_fan_summary,
    max_debt_to_dict,
    report_to_dict,
    solve_max_debt,
    solve_scenario,
)
from .errors import CreditEqError, InvalidConfigError


def create_app(cache_size: int = 8, static_dir: "str | None" = None) -> FastAPI:
    app = FastAPI(title="crediteq", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    cache = EnsembleCache(maxsize=cache_size)
    jobs: dict[str, dict] = {}
    jobs_lock = threading.Lock()
    app.state.ensemble_cache = cache

    def bad_request(exc: Exception) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.post("/api/scenario/solve")
    def solve(body: dict):
        try:
            cfg = scenario_from_dict(body)
        except InvalidConfigError as exc:
            return bad_request(exc)
        report = solve_scenario(cfg, cache)
        return report_to_dict(report)

    @app.get("/api/scenario/curves")
    def curves(preset: str):
        try:
            cfg = load_preset(preset)
        except InvalidConfigError as exc:
            return JSONResponse(status_code=404, content={"error": str(exc)})
        report = solve_scenario(cfg, cache)
        payload = report_to_dict(report)
        return {
            "preset": preset,
            "curves": payload["curves"],
            "r_min": payload["r_min"],
            "r_fix": payload["r_fix"],
            "r_max": payload["r_max"],
            "manifest": payload["manifest"],
        }

    @app.post("/api/scenario/compare")
    def compare(body: dict):
        try:
            base = scenario_from_dict(body.get("base", {}), name="base")
            variant = scenario_from_dict(body.get("variant", {}), name="variant")
        except InvalidConfigError as exc:
            return bad_request(exc)
        return compare_to_dict(compare_scenarios(base, variant, cache))

    @app.post("/api/scenario/fcf")
    def fcf(body: dict):
        try:
            cfg = scenario_from_dict(body)
        except InvalidConfigError as exc:
            return bad_request(exc)
        return fcf_fan_summary(cfg, cache)

    @app.post("/api/scenario/maxdebt")
    def maxdebt(body: dict):
        try:
            cfg = scenario_from_dict(body)
        except InvalidConfigError as exc:
            return bad_request(exc)
        job_id = uuid.uuid4().hex
        with jobs_lock:
            jobs[job_id] = {"status": "running", "result": None, "error": None}

        def run() -> None:
            try:
                result = max_debt_to_dict(solve_max_debt(cfg, cache), cfg)
                with jobs_lock:
                    jobs[job_id].update(status="done", result=result)
            except CreditEqError as exc:
                with jobs_lock:
                    jobs[job_id].update(status="error", error=str(exc))

        threading.Thread(target=run, daemon=True).start()
        return {"job_id": job_id, "status": "running"}

    @app.get("/api/jobs/{job_id}")
    def job_status(job_id: str):
        with jobs_lock:
            job = jobs.get(job_id)
            if job is None:
                return JSONResponse(status_code=404, content={"error": "unknown job"})
            return dict(job, job_id=job_id)

    @app.get("/api/presets")
    def presets():
        return {name: load_preset(name).to_dict() for name in PRESETS}

    if static_dir is not None:
        from starlette.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="workbench")

    return app


def main() -> None:
    """Serve the API, plus the workbench when frontend/ sits next to the CWD."""
    from pathlib import Path

    import uvicorn

    static = Path("frontend")
    static_dir = str(static) if (static / "index.html").exists() else None
    uvicorn.run(create_app(static_dir=static_dir), host="127.0.0.1", port=8710)


if __name__ == "__main__":
    main()
