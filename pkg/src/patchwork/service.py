"""Stateless HTTP/JSON service exposing the build/analyze/regularity core.

Every endpoint runs the same pure functions as the CLI and serializes with
the same canonical JSON writer, so responses are byte-identical to CLI
output for identical inputs.  Errors are structured objects
{code, message, pointer}.
"""

from __future__ import annotations

import traceback
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import corpus, pipeline
from .documents import PatchworkDocument, canonical_json
from .lattice import InvalidArgument


def _canonical_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        media_type="application/json",
        status_code=status_code,
    )


def _error(status, code, message, pointer=""):
    return _canonical_response(
        {"code": code, "message": message, "pointer": pointer}, status_code=status
    )


def create_app() -> FastAPI:
    app = FastAPI(title="patchwork", version="0.1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    async def _load_document(request: Request):
        try:
            data = await request.json()
        except Exception:
            raise InvalidArgument("body is not valid JSON")
        try:
            return PatchworkDocument.from_json(data)
        except InvalidArgument:
            raise
        except Exception as exc:
            raise InvalidArgument(str(exc))

    @app.exception_handler(InvalidArgument)
    async def _invalid(request, exc):
        return _error(400, "invalid-argument", str(exc), pointer="/")

    @app.exception_handler(Exception)
    async def _internal(request, exc):
        reproducer = str(uuid.uuid4())
        traceback.print_exc()
        return _error(500, "internal-anomaly", f"{exc} (reproducer {reproducer})")

    @app.post("/api/v1/analyze")
    async def analyze(request: Request):
        doc = await _load_document(request)
        return _canonical_response(pipeline.analyze_document(doc))

    @app.post("/api/v1/build")
    async def build(request: Request):
        doc = await _load_document(request)
        return _canonical_response(pipeline.build_document(doc))

    @app.post("/api/v1/regularity")
    async def regularity(request: Request):
        doc = await _load_document(request)
        return _canonical_response(pipeline.regularity_document(doc))

    @app.get("/api/v1/examples")
    async def examples():
        return _canonical_response(pipeline.examples_listing())

    @app.get("/api/v1/examples/{name}")
    async def example(name: str):
        try:
            doc = corpus.example(name)
        except KeyError:
            return _error(404, "not-found", f"unknown example {name!r}", pointer="/name")
        return _canonical_response(doc.to_json())

    @app.get("/api/v1/invariants")
    async def invariants(n: int, d: int):
        try:
            return _canonical_response(pipeline.invariants_payload(n, d))
        except (ValueError, AssertionError) as exc:
            raise InvalidArgument(str(exc))

    return app


def serve(host: str = "127.0.0.1", port: int = 8787):
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
