"""HTTP/JSON facade over the analysis library.

Sessions pin (dataset, black box, instance) triples in an in-memory LRU
store; surrogate queries run synchronously; sweeps, bootstraps, and lasso
paths run as polled jobs on a small worker pool with monotone progress.
Results embedded in responses are the canonical serialization of the exact
value the library returns, so a client never sees numbers the library would
not produce. Errors use one schema: ``{"error": {"code", "message"}}``.

Endpoints: POST /sessions, GET /sessions/{id}, POST /sessions/{id}/surrogate,
POST /sessions/{id}/jobs/{sweep|bootstrap|path}, GET /jobs/{id},
GET /sessions/{id}/export, POST /sessions/import, GET /healthz, static UI
assets at /.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import records
from .analysis import _check_C_grid, _check_radii
from .blackbox import MlpClassifier, meshgrid_predict
from .config import (
    ConfigError,
    DimensionError,
    build_blackbox,
    build_dataset,
    build_fit_config,
    resolve_C_grid,
    resolve_instance,
    resolve_radii,
    run_analysis,
)
from .datasets import Dataset
from .surrogates import surrogate_predict
from .types import Instance

JOB_KINDS = ("sweep", "bootstrap", "path")
MAX_BOUNDARY_RESOLUTION = 100
DEFAULT_SESSION_CAP = 32
_FALLBACK_PAGE = """<!doctype html>
<html><head><title>surrscope</title></head>
<body><h1>surrscope service</h1>
<p>The API is up. No built UI assets were found; point --frontend-dir at a
build output to serve the web client here.</p></body></html>
"""


class NotFoundError(Exception):
    pass


@dataclass
class Session:
    id: str
    dataset: Dataset
    blackbox: object
    blackbox_spec: dict
    train_accuracy: float | None
    instance: Instance
    defaults: dict
    annotations: list
    created_at: float


@dataclass
class Job:
    id: str
    session_id: str
    kind: str
    status: str = "pending"
    progress: float = 0.0
    result_text: str | None = None
    error: str | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class _LruStore:
    """Thread-safe LRU map with a hard capacity."""

    def __init__(self, cap: int):
        self._cap = cap
        self._items: OrderedDict[str, object] = OrderedDict()
        self._lock = threading.Lock()

    def put(self, key: str, value) -> None:
        with self._lock:
            self._items[key] = value
            self._items.move_to_end(key)
            while len(self._items) > self._cap:
                self._items.popitem(last=False)

    def get(self, key: str):
        with self._lock:
            if key not in self._items:
                return None
            self._items.move_to_end(key)
            return self._items[key]


def _error_body(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}


def _validate_defaults(spec) -> dict:
    if spec is None:
        return {}
    if not isinstance(spec, dict):
        raise ConfigError("defaults must be an object")
    allowed = {"n_samples", "kernel_width", "eval_n"}
    unknown = set(spec) - allowed
    if unknown:
        raise ConfigError(f"unknown defaults fields: {sorted(unknown)}")
    return dict(spec)


def _validate_annotations(raw) -> list:
    if raw is None:
        return []
    if not isinstance(raw, list):
        raise ConfigError("annotations must be a list")
    out = []
    for item in raw:
        if not isinstance(item, dict) or set(item) - {"interval", "label"}:
            raise ConfigError("annotation must be {interval: [lo, hi], label}")
        interval = item.get("interval")
        if (not isinstance(interval, list) or len(interval) != 2):
            raise ConfigError("annotation interval must be [lo, hi]")
        lo, hi = float(interval[0]), float(interval[1])
        if not (np.isfinite(lo) and np.isfinite(hi) and lo <= hi):
            raise ConfigError("annotation interval must be finite with lo <= hi")
        label = item.get("label", "")
        if not isinstance(label, str):
            raise ConfigError("annotation label must be a string")
        out.append({"interval": [lo, hi], "label": label})
    return out


def _session_view(session: Session) -> dict:
    dataset = session.dataset
    return {
        "id": session.id,
        "created_at": session.created_at,
        "dataset": {
            "feature_names": list(dataset.feature_names),
            "n_samples": dataset.n_samples,
            "dim": dataset.dim,
            "bounds": [[float(lo), float(hi)] for lo, hi in dataset.bounds],
        },
        "blackbox": {
            "kind": session.blackbox_spec["kind"],
            "train_accuracy": session.train_accuracy,
        },
        "instance": [float(v) for v in session.instance.values],
        "defaults": session.defaults,
        "annotations": session.annotations,
    }


def _dry_validate_job(kind: str, params: dict) -> None:
    """Reject obviously bad job params at submit time (cheap checks only)."""
    spec = {**params, "kind": kind}
    try:
        if kind in ("sweep", "bootstrap"):
            _check_radii(resolve_radii(spec), allow_zero=kind == "bootstrap")
            build_fit_config(spec)
        else:
            if "radius" not in spec:
                raise ConfigError("path requires a radius")
            grid = resolve_C_grid(spec)
            if grid is not None:
                _check_C_grid(grid)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"analysis: {exc}") from None


def create_app(session_cap: int = DEFAULT_SESSION_CAP, threads: int = 2,
               frontend_dir: str | None = None) -> FastAPI:
    executor = ThreadPoolExecutor(max_workers=max(1, threads))

    @asynccontextmanager
    async def lifespan(_app):
        yield
        executor.shutdown(wait=False)

    app = FastAPI(lifespan=lifespan)
    sessions = _LruStore(session_cap)
    jobs: dict[str, Job] = {}
    job_cache: dict[tuple, str] = {}
    job_lock = threading.Lock()

    @app.exception_handler(ConfigError)
    async def _on_config_error(_req: Request, exc: ConfigError):
        status = 422 if isinstance(exc, DimensionError) else 400
        code = "dimension_mismatch" if status == 422 else "invalid_config"
        return JSONResponse(_error_body(code, str(exc)), status_code=status)

    @app.exception_handler(NotFoundError)
    async def _on_not_found(_req: Request, exc: NotFoundError):
        return JSONResponse(_error_body("not_found", str(exc)), status_code=404)

    @app.exception_handler(RequestValidationError)
    async def _on_validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(_error_body("invalid_request", str(exc.errors())),
                            status_code=400)

    @app.exception_handler(StarletteHTTPException)
    async def _on_http_error(_req: Request, exc: StarletteHTTPException):
        return JSONResponse(_error_body("http_error", str(exc.detail)),
                            status_code=exc.status_code)

    def _get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return session

    def _store_session(dataset, blackbox, blackbox_spec, train_accuracy,
                       instance, defaults, annotations) -> Session:
        session = Session(
            id=uuid.uuid4().hex[:16], dataset=dataset, blackbox=blackbox,
            blackbox_spec=blackbox_spec, train_accuracy=train_accuracy,
            instance=instance, defaults=defaults, annotations=annotations,
            created_at=time.time(),
        )
        sessions.put(session.id, session)
        return session

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/sessions")
    def create_session(payload: dict):
        if not isinstance(payload, dict):
            raise ConfigError("request body must be an object")
        dataset = build_dataset(payload.get("dataset"))
        instance = resolve_instance(payload.get("instance"), dataset)
        blackbox, train_accuracy = build_blackbox(payload.get("blackbox"), dataset)
        session = _store_session(
            dataset, blackbox, dict(payload["blackbox"]), train_accuracy, instance,
            _validate_defaults(payload.get("defaults")),
            _validate_annotations(payload.get("annotations")),
        )
        return _session_view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return _session_view(_get_session(session_id))

    @app.post("/sessions/{session_id}/surrogate")
    def query_surrogate(session_id: str, payload: dict):
        session = _get_session(session_id)
        if "radius" not in payload:
            raise ConfigError("surrogate query requires a radius")
        analysis = {**session.defaults, **payload, "kind": "explain"}
        seed = analysis.pop("seed", 0)
        resolution = analysis.pop("boundary_resolution", MAX_BOUNDARY_RESOLUTION)
        entry = run_analysis(analysis, blackbox=session.blackbox,
                             dataset=session.dataset, instance=session.instance,
                             seed=seed)
        boundary = None
        if session.dataset.dim == 2:
            resolution = max(2, min(int(resolution), MAX_BOUNDARY_RESOLUTION))
            grid = meshgrid_predict(session.blackbox, session.dataset.bounds, resolution)
            surrogate_labels = surrogate_predict(entry.surrogate, grid.points)
            boundary = {
                "bounds": [[float(lo), float(hi)] for lo, hi in grid.bounds],
                "resolution": resolution,
                "blackbox_labels": [int(v) for v in grid.labels],
                "surrogate_labels": [int(v) for v in surrogate_labels],
            }
        return {"entry": records.encode_value(entry), "boundary": boundary}

    @app.post("/sessions/{session_id}/jobs/{kind}")
    def submit_job(session_id: str, kind: str, payload: dict):
        session = _get_session(session_id)
        if kind not in JOB_KINDS:
            raise NotFoundError(f"unknown job kind {kind!r}")
        params = {**session.defaults, **payload}
        _dry_validate_job(kind, params)
        cache_key = (session.id, kind, json.dumps(params, sort_keys=True))
        with job_lock:
            existing = job_cache.get(cache_key)
            if existing is not None:
                return {"job_id": existing, "status": jobs[existing].status}
            job = Job(id=uuid.uuid4().hex[:16], session_id=session.id, kind=kind)
            jobs[job.id] = job
            job_cache[cache_key] = job.id

        seed = params.pop("seed", 0)
        analysis = {**params, "kind": kind}

        def on_progress(done: int, total: int) -> None:
            with job.lock:
                job.progress = done / total

        def run() -> None:
            try:
                result = run_analysis(analysis, blackbox=session.blackbox,
                                      dataset=session.dataset,
                                      instance=session.instance, seed=seed,
                                      on_progress=on_progress)
                text = records.serialize(result)
                with job.lock:
                    job.result_text = text
                    job.progress = 1.0
                    job.status = "done"
            except Exception as exc:
                with job.lock:
                    job.error = f"{type(exc).__name__}: {exc}"
                    job.status = "failed"

        executor.submit(run)
        return {"job_id": job.id, "status": job.status}

    @app.get("/jobs/{job_id}")
    def poll_job(job_id: str):
        job = jobs.get(job_id)
        if job is None:
            raise NotFoundError(f"unknown job {job_id!r}")
        with job.lock:
            status, progress = job.status, job.progress
            result_text, error = job.result_text, job.error
        if status == "done":
            return {"status": status, "progress": 1.0,
                    "result": json.loads(result_text)}
        if status == "failed":
            return {"status": status, "progress": progress,
                    "error": {"code": "analysis_error", "message": error}}
        return {"status": status, "progress": progress}

    @app.get("/sessions/{session_id}/export")
    def export_session(session_id: str):
        session = _get_session(session_id)
        if isinstance(session.blackbox, MlpClassifier):
            blackbox = {"kind": "builtin_mlp",
                        "model": records.to_record(session.blackbox)}
        else:
            blackbox = dict(session.blackbox_spec)
        export = {
            "type": "session_export",
            "dataset": records.to_record(session.dataset),
            "blackbox": blackbox,
            "instance": records.to_record(session.instance),
            "defaults": session.defaults,
            "annotations": session.annotations,
            "created_at": session.created_at,
        }
        return Response(content=records.canonical_json(export),
                        media_type="application/json")

    @app.post("/sessions/import")
    def import_session(payload: dict):
        if not isinstance(payload, dict) or payload.get("type") != "session_export":
            raise ConfigError('import payload must have "type": "session_export"')
        try:
            dataset = records.from_record(payload["dataset"])
            instance = records.from_record(payload["instance"])
            blackbox_spec = payload["blackbox"]
            if blackbox_spec.get("kind") == "builtin_mlp" and "model" in blackbox_spec:
                blackbox = records.from_record(blackbox_spec["model"])
                train_accuracy = float(blackbox.train_accuracy_)
                stored_spec = {"kind": "builtin_mlp"}
            else:
                blackbox, train_accuracy = build_blackbox(blackbox_spec, dataset)
                stored_spec = dict(blackbox_spec)
        except ConfigError:
            raise
        except (KeyError, ValueError, TypeError) as exc:
            raise ConfigError(f"import payload invalid: {exc}") from None
        if instance.dim != dataset.dim:
            raise DimensionError(f"instance has {instance.dim} features, "
                                 f"dataset has {dataset.dim}")
        if getattr(blackbox, "n_features_in_", dataset.dim) != dataset.dim:
            raise DimensionError("black box input dimension does not match dataset")
        session = _store_session(
            dataset, blackbox, stored_spec, train_accuracy, instance,
            _validate_defaults(payload.get("defaults")),
            _validate_annotations(payload.get("annotations")),
        )
        return _session_view(session)

    index = Path(frontend_dir) / "index.html" if frontend_dir else None
    if index is not None and index.is_file():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def root():
            return _FALLBACK_PAGE

    return app
