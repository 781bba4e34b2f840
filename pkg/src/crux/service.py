"""HTTP API over the pipelines, curation sessions, and the grid engine."""

from __future__ import annotations

import os
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from .core import make_pair
from .generator import GenerationConfig, NoSolution, generate
from .llm.gateway import Gateway, LiveProvider
from .pipeline_keyword import generate_clues_for_keyword
from .pipeline_text import EmptyDocument, StageError, run_path_a
from .puzzle import assign_numbering, export_puzzle, puzzle_from_dict, puzzle_to_dict
from .store import (
    DocumentStore,
    InvalidStatusTransition,
    UnknownPair,
    UnknownPuzzle,
    UnknownSession,
    new_session,
)

ENV_DATA_DIR = "CRUX_DATA_DIR"


class TextPipelineRequest(BaseModel):
    document: str
    lang: str = "en"


class KeywordPipelineRequest(BaseModel):
    keywords: list[str]
    n: int = 3
    lang: str = "it"


class PairPatch(BaseModel):
    status: str | None = None
    edited_clue: str | None = None
    preferred: bool | None = None


class GenerateRequest(BaseModel):
    width: int = 15
    height: int = 15
    min_words: int = 2
    min_fill_ratio: float = Field(0.0, alias="min_fill")
    max_restarts: int = 50
    max_duration: float = 10.0
    preferred_weight: float = 5.0
    seed: int = 0

    model_config = {"populate_by_name": True}


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error_code": code, "message": message}
    )


def create_app(
    gateway: Gateway | None = None, data_dir: str | Path | None = None
) -> FastAPI:
    if data_dir is None:
        data_dir = os.environ.get(ENV_DATA_DIR, ".crux-data")
    store = DocumentStore(data_dir)
    app = FastAPI(title="crux", version="0.1.0")
    app.state.store = store
    app.state.gateway = gateway

    def get_gateway() -> Gateway:
        if app.state.gateway is None:
            app.state.gateway = Gateway(LiveProvider.from_env())
        return app.state.gateway

    @app.exception_handler(UnknownSession)
    async def _unknown_session(request: Request, exc: UnknownSession):
        return _error(404, "UnknownSession", str(exc))

    @app.exception_handler(UnknownPuzzle)
    async def _unknown_puzzle(request: Request, exc: UnknownPuzzle):
        return _error(404, "UnknownPuzzle", str(exc))

    @app.exception_handler(UnknownPair)
    async def _unknown_pair(request: Request, exc: UnknownPair):
        return _error(404, "UnknownPair", str(exc))

    @app.exception_handler(InvalidStatusTransition)
    async def _bad_transition(request: Request, exc: InvalidStatusTransition):
        return _error(409, "InvalidStatusTransition", str(exc))

    @app.exception_handler(NoSolution)
    async def _no_solution(request: Request, exc: NoSolution):
        return _error(422, "NoSolution", str(exc))

    @app.exception_handler(EmptyDocument)
    async def _empty_document(request: Request, exc: EmptyDocument):
        return _error(422, "EmptyDocument", str(exc))

    @app.exception_handler(StageError)
    async def _stage_error(request: Request, exc: StageError):
        return _error(422, "StageError", str(exc))

    @app.post("/api/pipeline/text")
    def pipeline_text(req: TextPipelineRequest):
        pairs, report = run_path_a(req.document, req.lang, get_gateway())
        session = new_session(pairs)
        store.save_session(session)
        return {"session": session.to_dict(), "report": report.to_dict()}

    @app.post("/api/pipeline/keywords")
    def pipeline_keywords(req: KeywordPipelineRequest):
        pairs = []
        for keyword in req.keywords:
            pairs.extend(
                generate_clues_for_keyword(keyword, req.n, get_gateway(), req.lang)
            )
        session = new_session(pairs)
        store.save_session(session)
        return {"session": session.to_dict()}

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        return store.load_session(session_id).to_dict()

    @app.patch("/api/sessions/{session_id}/pairs/{pair_id}")
    def patch_pair(session_id: str, pair_id: str, patch: PairPatch):
        session = store.load_session(session_id)
        pair = session.pair(pair_id)
        if patch.edited_clue is not None:
            session.transition(pair_id, "edited")
            pair.edited_clue = patch.edited_clue
        if patch.status is not None:
            session.transition(pair_id, patch.status)
        if patch.preferred is not None:
            pair.preferred = patch.preferred
        store.save_session(session)
        return pair.to_dict()

    @app.post("/api/sessions/{session_id}/generate")
    def generate_puzzle(session_id: str, req: GenerateRequest):
        session = store.load_session(session_id)
        curated = session.curated_pairs()
        if len(curated) < 2:
            return _error(
                422,
                "NoSolution",
                f"need at least 2 accepted pairs, have {len(curated)}",
            )
        pool = [
            make_pair(p.effective_clue, p.answer_display, p.source, p.language)
            for p in curated
        ]
        preferred = {p.answer_grid for p in curated if p.preferred}
        config = GenerationConfig(
            width=req.width,
            height=req.height,
            min_words=req.min_words,
            min_fill_ratio=req.min_fill_ratio,
            max_restarts=req.max_restarts,
            max_duration=req.max_duration,
            preferred_weight=req.preferred_weight,
            seed=req.seed,
        )
        result = generate(pool, preferred, config)
        puzzle = assign_numbering(result.grid, pool, result.breakdown)
        puzzle_id = uuid.uuid4().hex
        store.save_puzzle(puzzle_id, puzzle_to_dict(puzzle))
        session.puzzle_ids.append(puzzle_id)
        store.save_session(session)
        return {"puzzle_id": puzzle_id, "score": result.breakdown.to_dict()}

    @app.get("/api/puzzles/{puzzle_id}")
    def get_puzzle(puzzle_id: str, format: str = "json"):
        payload = store.load_puzzle(puzzle_id)
        if format == "text":
            text = export_puzzle(puzzle_from_dict(payload), "text")
            return PlainTextResponse(text.decode("utf-8"))
        return payload

    return app
