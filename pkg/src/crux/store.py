"""On-disk JSON persistence for curation sessions and generated puzzles."""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .core import CruxError

VALID_TRANSITIONS = {
    "pending": {"accepted", "rejected", "edited"},
    "edited": {"accepted", "rejected"},
    "accepted": set(),
    "rejected": set(),
}


class UnknownSession(CruxError):
    pass


class UnknownPuzzle(CruxError):
    pass


class UnknownPair(CruxError):
    pass


class InvalidStatusTransition(CruxError):
    pass


@dataclass
class SessionPair:
    pair_id: str
    clue: str
    answer_display: str
    answer_grid: str
    source: str
    language: str
    status: str = "pending"
    original_clue: str | None = None
    edited_clue: str | None = None
    preferred: bool = False

    @property
    def effective_clue(self) -> str:
        return self.edited_clue if self.edited_clue is not None else self.clue

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "clue": self.clue,
            "answer_display": self.answer_display,
            "answer_grid": self.answer_grid,
            "source": self.source,
            "language": self.language,
            "status": self.status,
            "original_clue": self.original_clue,
            "edited_clue": self.edited_clue,
            "preferred": self.preferred,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SessionPair":
        return cls(**d)


@dataclass
class CurationSession:
    session_id: str
    created_at: str
    pairs: list[SessionPair] = field(default_factory=list)
    puzzle_ids: list[str] = field(default_factory=list)

    def pair(self, pair_id: str) -> SessionPair:
        for p in self.pairs:
            if p.pair_id == pair_id:
                return p
        raise UnknownPair(pair_id)

    def transition(self, pair_id: str, status: str) -> SessionPair:
        p = self.pair(pair_id)
        if status not in VALID_TRANSITIONS:
            raise InvalidStatusTransition(f"unknown status {status!r}")
        if status != p.status and status not in VALID_TRANSITIONS[p.status]:
            raise InvalidStatusTransition(f"{p.status} -> {status}")
        p.status = status
        return p

    def curated_pairs(self) -> list[SessionPair]:
        """Pairs that flow to schema generation: accepted or edited only."""
        return [p for p in self.pairs if p.status in ("accepted", "edited")]

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "created_at": self.created_at,
            "pairs": [p.to_dict() for p in self.pairs],
            "puzzle_ids": list(self.puzzle_ids),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CurationSession":
        return cls(
            session_id=d["session_id"],
            created_at=d["created_at"],
            pairs=[SessionPair.from_dict(p) for p in d["pairs"]],
            puzzle_ids=list(d["puzzle_ids"]),
        )


def new_session(pairs) -> CurationSession:
    """Create a session from ClueAnswerPair values."""
    session = CurationSession(
        session_id=uuid.uuid4().hex,
        created_at=datetime.now(timezone.utc).isoformat(),
    )
    for i, pair in enumerate(pairs):
        session.pairs.append(
            SessionPair(
                pair_id=f"p{i}",
                clue=pair.clue,
                answer_display=pair.answer_display,
                answer_grid=pair.answer_grid,
                source=pair.source,
                language=pair.language,
                original_clue=pair.clue,
            )
        )
    return session


class DocumentStore:
    """Sessions and puzzles as JSON documents keyed by id.

    Per-session mutations are serialized behind one lock; distinct
    sessions do not contend beyond file writes.
    """

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        (self.data_dir / "sessions").mkdir(parents=True, exist_ok=True)
        (self.data_dir / "puzzles").mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _session_path(self, session_id: str) -> Path:
        return self.data_dir / "sessions" / f"{session_id}.json"

    def _puzzle_path(self, puzzle_id: str) -> Path:
        return self.data_dir / "puzzles" / f"{puzzle_id}.json"

    def save_session(self, session: CurationSession) -> None:
        with self._lock:
            self._session_path(session.session_id).write_text(
                json.dumps(session.to_dict(), ensure_ascii=False, indent=2),
                encoding="utf-8",
            )

    def load_session(self, session_id: str) -> CurationSession:
        path = self._session_path(session_id)
        if not path.exists():
            raise UnknownSession(session_id)
        return CurationSession.from_dict(
            json.loads(path.read_text(encoding="utf-8"))
        )

    def save_puzzle(self, puzzle_id: str, payload: dict) -> None:
        with self._lock:
            self._puzzle_path(puzzle_id).write_text(
                json.dumps(payload, ensure_ascii=False, indent=2),
                encoding="utf-8",
            )

    def load_puzzle(self, puzzle_id: str) -> dict:
        path = self._puzzle_path(puzzle_id)
        if not path.exists():
            raise UnknownPuzzle(puzzle_id)
        return json.loads(path.read_text(encoding="utf-8"))
