"""HTTP session service driving the interactive explorer.

Endpoints (JSON bodies, all responses carry "v": 1):

    POST /session {"quiver": <quiver>, "mode": "X"|"Y"} -> {"id", "seed"}
    GET  /session/{id}                  -> {"seed", "history"}
    POST /session/{id}/mutate {"vertex"} -> {"seed", "exchange"}
    POST /session/{id}/undo             -> {"seed"}
    GET  /session/{id}/neighbors        -> {"neighbors": [...]}

Requests to one session are serialized by a per-session lock; distinct
sessions proceed concurrently.  Sessions live in memory, with optional
one-file-per-session snapshots under a persist directory.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .jsonio import SCHEMA_VERSION, SchemaError, quiver_from_json, seed_to_json
from .quiver import IceQuiver
from .seeds import (
    Seed,
    YSeed,
    denominator_vector,
    exchange_products,
    initial_seed,
    initial_yseed,
    mutate_seed,
    mutate_yseed,
)
from .textform import default_names, render_laurent, render_rational

logger = logging.getLogger("amas.service")


@dataclass
class SessionState:
    id: str
    mode: str  # "X" or "Y"
    quiver: IceQuiver
    entries: list[tuple[Seed | YSeed, int | None]]  # (seed, vertex that produced it)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def current(self) -> Seed | YSeed:
        return self.entries[-1][0]


def _seed_json(state: SessionState, seed: Seed | YSeed) -> dict[str, Any]:
    if state.mode == "X":
        assert isinstance(seed, Seed)
        return seed_to_json(seed)
    assert isinstance(seed, YSeed)
    names = default_names(seed.quiver.n, "y")
    return {
        "v": SCHEMA_VERSION,
        "quiver": {
            "v": SCHEMA_VERSION,
            "n": seed.quiver.n,
            "m": seed.quiver.m,
            "b": [list(row) for row in seed.quiver.b],
        },
        "vars": [render_rational(v, names) for v in seed.vars],
    }


def _history_json(state: SessionState) -> list[dict[str, Any]]:
    return [
        {"vertex": vertex, "seed": _seed_json(state, seed)}
        for seed, vertex in state.entries
    ]


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"v": SCHEMA_VERSION, "error": message}
    )


def create_app(persist_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="amas session service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, SessionState] = {}
    store_lock = threading.Lock()
    persist_path = Path(persist_dir) if persist_dir else None
    if persist_path:
        persist_path.mkdir(parents=True, exist_ok=True)

    def persist(state: SessionState) -> None:
        if persist_path is None:
            return
        payload = {
            "v": SCHEMA_VERSION,
            "id": state.id,
            "mode": state.mode,
            "history": _history_json(state),
        }
        (persist_path / f"{state.id}.json").write_text(json.dumps(payload, indent=2))

    @app.post("/session")
    async def create_session(request: Request) -> Any:
        body = await request.json()
        if not isinstance(body, dict) or "quiver" not in body:
            return _error(400, "body must carry a quiver object")
        mode = body.get("mode", "X")
        if mode not in ("X", "Y"):
            return _error(400, f"unknown mode {mode!r}")
        try:
            quiver = quiver_from_json(body["quiver"])
        except SchemaError as exc:
            return _error(400, str(exc))
        if mode == "Y" and quiver.m != quiver.n:
            return _error(400, "Y-mode sessions need a quiver without frozen vertices")
        seed: Seed | YSeed = (
            initial_seed(quiver) if mode == "X" else initial_yseed(quiver)
        )
        state = SessionState(
            id=uuid.uuid4().hex, mode=mode, quiver=quiver, entries=[(seed, None)]
        )
        with store_lock:
            sessions[state.id] = state
        persist(state)
        logger.info("created session %s (mode %s)", state.id, mode)
        return {
            "v": SCHEMA_VERSION,
            "id": state.id,
            "seed": _seed_json(state, seed),
        }

    def lookup(session_id: str) -> SessionState | None:
        with store_lock:
            return sessions.get(session_id)

    @app.get("/session/{session_id}")
    def get_session(session_id: str) -> Any:
        state = lookup(session_id)
        if state is None:
            return _error(404, f"unknown session {session_id}")
        with state.lock:
            return {
                "v": SCHEMA_VERSION,
                "id": state.id,
                "mode": state.mode,
                "seed": _seed_json(state, state.current),
                "history": _history_json(state),
            }

    @app.post("/session/{session_id}/mutate")
    async def mutate(session_id: str, request: Request) -> Any:
        state = lookup(session_id)
        if state is None:
            return _error(404, f"unknown session {session_id}")
        body = await request.json()
        vertex = body.get("vertex") if isinstance(body, dict) else None
        if not isinstance(vertex, int):
            return _error(400, "body must carry an integer vertex")
        with state.lock:
            seed = state.current
            if not 1 <= vertex <= seed.quiver.m:
                return _error(400, f"vertex {vertex} out of range 1..{seed.quiver.m}")
            if vertex > seed.quiver.n:
                return _error(400, f"vertex {vertex} is frozen")
            exchange = None
            if state.mode == "X":
                assert isinstance(seed, Seed)
                names = default_names(seed.quiver.m)
                p_out, p_in = exchange_products(seed, vertex)
                exchange = {
                    "out": render_laurent(p_out, names),
                    "in": render_laurent(p_in, names),
                }
                new_seed: Seed | YSeed = mutate_seed(seed, vertex)
            else:
                assert isinstance(seed, YSeed)
                new_seed = mutate_yseed(seed, vertex)
            state.entries.append((new_seed, vertex))
            persist(state)
            return {
                "v": SCHEMA_VERSION,
                "seed": _seed_json(state, new_seed),
                "exchange": exchange,
            }

    @app.post("/session/{session_id}/undo")
    def undo(session_id: str) -> Any:
        state = lookup(session_id)
        if state is None:
            return _error(404, f"unknown session {session_id}")
        with state.lock:
            if len(state.entries) == 1:
                return _error(409, "nothing to undo")
            state.entries.pop()
            persist(state)
            return {"v": SCHEMA_VERSION, "seed": _seed_json(state, state.current)}

    @app.get("/session/{session_id}/neighbors")
    def neighbors(session_id: str) -> Any:
        state = lookup(session_id)
        if state is None:
            return _error(404, f"unknown session {session_id}")
        with state.lock:
            seed = state.current
            out = []
            for k in range(1, seed.quiver.n + 1):
                if state.mode == "X":
                    assert isinstance(seed, Seed)
                    preview = mutate_seed(seed, k)
                    dvec = list(
                        denominator_vector(preview.vars[k - 1], seed.quiver.n)
                    )
                else:
                    dvec = None  # denominator vectors are an X-mode notion
                out.append({"vertex": k, "denominator_vector": dvec})
            return {"v": SCHEMA_VERSION, "neighbors": out}

    return app


def run(host: str = "127.0.0.1", port: int = 8777, persist_dir: str | None = None) -> None:
    import uvicorn

    level = os.environ.get("AMAS_LOG", "warning").lower()
    uvicorn.run(create_app(persist_dir), host=host, port=port, log_level=level)
