"""HTTP/JSON facade for the analyst workbench.

Single-session server: one context at a time, mining runs cached per exact
density threshold, analyst annotations appended to a line-delimited log on
disk and replayed at startup. All GET endpoints are pure views of the
session; mutations are serialized behind a lock, and replacing the context
atomically drops every cached run.

Density thresholds appear in routes as URL-safe tokens: the exact rational
with '/' replaced by '_' ("5/6" -> "5_6"); integers and decimal strings
also parse. `POST /runs` echoes the token to use.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import ingest, oracle
from .analytics import (
    PLANES,
    coverage_map,
    largest_tricluster,
    order_by_density,
    triclusters_containing,
)
from .core import Tricluster, TriadicContext
from .errors import (
    CapExceededError,
    EmptyStoreError,
    MalformedLineError,
    TriscopeError,
    UnknownLabelError,
)
from .mining import TriclusterStore, enumerate_triclusters
from .recommend import recommend, user_profile

__all__ = ["create_app"]

VERDICTS = ("meaningful", "not_meaningful", "unsure")


@dataclass
class Annotation:
    tricluster_key: str
    verdict: str
    note: str
    timestamp: str

    def as_dict(self) -> dict:
        return {
            "tricluster_key": self.tricluster_key,
            "verdict": self.verdict,
            "note": self.note,
            "timestamp": self.timestamp,
        }


class Session:
    """Mutable workbench state: context, cached runs, annotation log."""

    def __init__(self, data_dir: Path):
        self.context: TriadicContext | None = None
        self.runs: dict[Fraction, TriclusterStore] = {}
        self.annotations: list[Annotation] = []
        self.lock = threading.Lock()
        self.data_dir = data_dir
        self.log_path = data_dir / "annotations.jsonl"
        self._replay()

    def _replay(self) -> None:
        if not self.log_path.exists():
            return
        with open(self.log_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    self.annotations.append(Annotation(**json.loads(line)))

    def append_annotation(self, ann: Annotation) -> None:
        self.data_dir.mkdir(parents=True, exist_ok=True)
        with open(self.log_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(ann.as_dict(), ensure_ascii=False) + "\n")
        self.annotations.append(ann)

    def replace_context(self, context: TriadicContext) -> None:
        self.context = context
        self.runs = {}

    def known_key(self, key: str) -> bool:
        return any(key in store for store in self.runs.values())


class ApiError(Exception):
    def __init__(self, status: int, detail: str):
        self.status = status
        self.detail = detail


def _fraction_str(x: Fraction) -> str:
    # same num/den form the results document uses
    return f"{x.numerator}/{x.denominator}"


def _tricluster_json(key: str, t: Tricluster, context: TriadicContext) -> dict:
    return {
        "key": key,
        "extent": context.objects.labels_of(t.extent),
        "intent": context.attributes.labels_of(t.intent),
        "modus": context.conditions.labels_of(t.modus),
        "density": _fraction_str(t.density),
        "density_float": round(float(t.density), 4),
        "volume": t.volume,
    }


def create_app(
    data_dir: str | Path | None = None,
    *,
    triconcept_cap: int = oracle.DEFAULT_TRICONCEPT_CAP,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    """Build the workbench backend; ``data_dir`` holds the annotation log.

    Default data dir: $TRISCOPE_DATA_DIR, falling back to ./triscope-data.
    """
    import os

    if data_dir is None:
        data_dir = os.environ.get("TRISCOPE_DATA_DIR", "triscope-data")
    session = Session(Path(data_dir))

    app = FastAPI(title="triscope", version="0.1.0")
    app.state.session = session
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"detail": exc.detail})

    def current_context() -> TriadicContext:
        if session.context is None:
            raise ApiError(409, "no context loaded; POST /context first")
        return session.context

    def parse_rho_or_422(token: str) -> Fraction:
        try:
            return ingest.parse_rho_token(token)
        except (ValueError, ZeroDivisionError):
            raise ApiError(422, f"invalid density threshold {token!r}") from None

    def run_for(token: str) -> TriclusterStore:
        rho = parse_rho_or_422(token)
        store = session.runs.get(rho)
        if store is None:
            raise ApiError(404, f"no run computed for rho_min={_fraction_str(rho)}")
        return store

    def resolve(axis, label: str) -> int:
        try:
            return axis.id_of(label)
        except UnknownLabelError:
            raise ApiError(404, f"unknown label {label!r}") from None

    @app.post("/context")
    async def post_context(request: Request):
        body = await request.body()
        content_type = request.headers.get("content-type", "")
        with session.lock:
            try:
                if "json" in content_type:
                    context = ingest.context_from_document(json.loads(body))
                    duplicates = 0
                else:
                    context, duplicates = ingest.parse_triples(body.decode("utf-8"))
            except (MalformedLineError, json.JSONDecodeError, UnicodeDecodeError, KeyError, TriscopeError) as exc:
                raise ApiError(400, f"malformed context payload: {exc}") from None
            session.replace_context(context)
        return {
            "objects": len(context.objects),
            "attributes": len(context.attributes),
            "conditions": len(context.conditions),
            "incidences": len(context.triples),
            "duplicates": duplicates,
        }

    @app.post("/runs")
    async def post_run(request: Request):
        try:
            payload = json.loads(await request.body())
            raw = payload["rho_min"]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise ApiError(400, f"malformed run request: {exc}") from None
        try:
            # str() first so JSON floats like 0.01 mean the decimal, not the
            # nearest binary float
            rho = ingest.parse_rho(str(raw).replace("_", "/"))
        except (ValueError, ZeroDivisionError, TypeError):
            raise ApiError(422, f"invalid rho_min {raw!r}") from None
        with session.lock:
            context = current_context()
            store = session.runs.get(rho)
            if store is None:
                store = enumerate_triclusters(context, rho_min=rho)
                session.runs[rho] = store
        histogram = [0] * 10
        for t in store:
            histogram[min(int(t.density * 10), 9)] += 1
        return {
            "rho_min": str(rho),
            "rho_key": ingest.rho_token(rho),
            "count": len(store),
            "density_histogram": histogram,
        }

    @app.get("/runs/{rho}/heatmap")
    def get_heatmap(rho: str, plane: str = "GM"):
        context = current_context()
        store = run_for(rho)
        if plane.upper() not in PLANES:
            raise ApiError(400, f"plane must be one of {sorted(PLANES)}")
        cmap = coverage_map(store, context, plane.upper())
        return {
            "plane": plane.upper(),
            "rows": list(cmap.row_labels),
            "cols": list(cmap.col_labels),
            "counts": [[int(c) for c in row] for row in cmap.counts],
        }

    @app.get("/runs/{rho}/cell/{g}/{m}")
    def get_cell(rho: str, g: str, m: str):
        context = current_context()
        store = run_for(rho)
        gid = resolve(context.objects, g)
        mid = resolve(context.attributes, m)
        listing = triclusters_containing(store, gid, mid)
        return {
            "object": g,
            "attribute": m,
            "count": len(listing),
            "triclusters": [_tricluster_json(store.key_of(t), t, context) for t in listing],
        }

    @app.get("/runs/{rho}/cell/{g}/{m}/largest")
    def get_largest(rho: str, g: str, m: str, by: str = "volume"):
        context = current_context()
        store = run_for(rho)
        gid = resolve(context.objects, g)
        mid = resolve(context.attributes, m)
        if by not in ("volume", "extent"):
            raise ApiError(400, "by must be 'volume' or 'extent'")
        best = largest_tricluster(store, gid, mid, by=by)
        if best is None:
            return {"tricluster": None}
        return {"tricluster": _tricluster_json(store.key_of(best), best, context)}

    @app.get("/runs/{rho}/triclusters")
    def get_triclusters(rho: str, order: str = "density", offset: int = 0, limit: int = 100):
        context = current_context()
        store = run_for(rho)
        if order != "density":
            raise ApiError(400, "only order=density is supported")
        if offset < 0 or limit < 1:
            raise ApiError(400, "offset must be >= 0 and limit >= 1")
        ordered = order_by_density(store)
        page = ordered[offset : offset + limit]
        return {
            "total": len(ordered),
            "offset": offset,
            "items": [_tricluster_json(store.key_of(t), t, context) for t in page],
        }

    @app.get("/runs/{rho}/recommend/{u}")
    def get_recommendation(rho: str, u: str):
        context = current_context()
        store = run_for(rho)
        uid = resolve(context.objects, u)
        try:
            rec = recommend(context, store, uid)
        except EmptyStoreError as exc:
            raise ApiError(409, str(exc)) from None
        best = store.get(rec.best_key)
        assert best is not None
        profile = user_profile(context, uid)
        return {
            "user": u,
            "best": _tricluster_json(rec.best_key, best, context),
            "similarity": _fraction_str(rec.similarity),
            "similarity_float": round(float(rec.similarity), 4),
            "recommended_tags": context.attributes.labels_of(rec.recommended_tags),
            "recommended_resources": context.conditions.labels_of(rec.recommended_resources),
            "profile_tags": context.attributes.labels_of(profile.tags),
            "profile_resources": context.conditions.labels_of(profile.resources),
        }

    @app.get("/runs/{rho}/results")
    def get_results(rho: str):
        context = current_context()
        store = run_for(rho)
        doc = ingest.results_document(context, store)
        return Response(content=ingest.document_bytes(doc), media_type="application/json")

    @app.get("/concepts/tri")
    def get_triconcepts():
        context = current_context()
        try:
            concepts = oracle.enumerate_triconcepts(context, cap=triconcept_cap)
        except CapExceededError as exc:
            raise ApiError(409, str(exc)) from None
        return {
            "count": len(concepts),
            "triconcepts": [
                {
                    "extent": context.objects.labels_of(c.extent),
                    "intent": context.attributes.labels_of(c.intent),
                    "modus": context.conditions.labels_of(c.modus),
                }
                for c in concepts
            ],
        }

    @app.get("/concepts/dyadic")
    def get_dyadic_concepts(axis: int = 1):
        context = current_context()
        if axis not in (1, 2, 3):
            raise ApiError(400, "axis must be 1, 2 or 3")
        flat = context.project(axis)
        try:
            concepts = oracle.enumerate_formal_concepts(flat)
        except CapExceededError as exc:
            raise ApiError(409, str(exc)) from None
        return {
            "axis": axis,
            "count": len(concepts),
            "concepts": [
                {
                    "extent": flat.objects.labels_of(c.extent),
                    "intent": flat.attributes.labels_of(c.intent),
                }
                for c in concepts
            ],
        }

    @app.post("/annotations")
    async def post_annotation(request: Request):
        try:
            payload = json.loads(await request.body())
            key = payload["tricluster_key"]
            verdict = payload["verdict"]
            note = str(payload.get("note", ""))
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise ApiError(400, f"malformed annotation: {exc}") from None
        if verdict not in VERDICTS:
            raise ApiError(400, f"verdict must be one of {VERDICTS}")
        with session.lock:
            if not session.known_key(key):
                raise ApiError(404, f"tricluster key {key!r} not present in any run")
            ann = Annotation(
                tricluster_key=key,
                verdict=verdict,
                note=note,
                timestamp=datetime.now(timezone.utc).isoformat(),
            )
            session.append_annotation(ann)
        return ann.as_dict()

    @app.get("/annotations")
    def get_annotations():
        return {"annotations": [a.as_dict() for a in session.annotations]}

    return app
