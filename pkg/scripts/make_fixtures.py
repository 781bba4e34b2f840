"""Regenerate the committed replay fixtures and golden files under
tests/fixtures/. Run from the repo root:

    python3 scripts/make_fixtures.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from crux.generator import GenerationConfig, generate
from crux.llm import Gateway, ScriptedProvider
from crux.pipeline_text import run_path_a
from crux.puzzle import assign_numbering, export_puzzle

from conftest import ITALIAN_20, pool_pairs
from transcripts import SCIENCE_PARAGRAPH, SCRIPTED_RESPONSES

FIXTURES = ROOT / "tests" / "fixtures"


class RecordingProvider:
    """Plays scripted responses while recording replay-fixture lines."""

    def __init__(self, responses):
        self.inner = ScriptedProvider(responses)
        self.records = []

    def complete(self, prompt, params, digest, template_id):
        text = self.inner.complete(prompt, params, digest, template_id)
        self.records.append(
            {"digest": digest, "template_id": template_id, "response_text": text}
        )
        return text


def make_path_a_fixture():
    provider = RecordingProvider(list(SCRIPTED_RESPONSES))
    pairs, report = run_path_a(SCIENCE_PARAGRAPH, "it", Gateway(provider))
    assert len(pairs) == 6, [p.answer_grid for p in pairs]
    out = FIXTURES / "path_a_science.jsonl"
    with out.open("w", encoding="utf-8") as fh:
        for rec in provider.records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    print(f"wrote {out} ({len(provider.records)} exchanges)")


def make_seed42_golden():
    pool = pool_pairs(ITALIAN_20)
    config = GenerationConfig(
        width=15, height=15, min_words=8, min_fill_ratio=0.35,
        max_restarts=50, max_duration=10.0, seed=42,
    )
    result = generate(pool, set(), config)
    puzzle = assign_numbering(result.grid, pool, result.breakdown)
    out = FIXTURES / "golden_puzzle_seed42.json"
    out.write_bytes(export_puzzle(puzzle, "json"))
    print(f"wrote {out} (fw={result.breakdown.fw}, score={result.breakdown.score:.4f})")


def make_service_golden():
    from fastapi.testclient import TestClient

    from crux.llm import ReplayProvider
    from crux.service import create_app

    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        gateway = Gateway(ReplayProvider(FIXTURES / "path_a_science.jsonl"))
        app = create_app(gateway=gateway, data_dir=tmp)
        client = TestClient(app)
        resp = client.post(
            "/api/pipeline/text",
            json={"document": SCIENCE_PARAGRAPH, "lang": "it"},
        )
        resp.raise_for_status()
        session = resp.json()["session"]
        for pair in session["pairs"][:4]:
            client.patch(
                f"/api/sessions/{session['session_id']}/pairs/{pair['pair_id']}",
                json={"status": "accepted"},
            ).raise_for_status()
        resp = client.post(
            f"/api/sessions/{session['session_id']}/generate",
            json={
                "width": 15, "height": 15, "min_words": 4, "min_fill": 0.0,
                "max_restarts": 50, "max_duration": 10.0, "seed": 42,
            },
        )
        resp.raise_for_status()
        puzzle_id = resp.json()["puzzle_id"]
        payload = client.get(f"/api/puzzles/{puzzle_id}").json()
    out = FIXTURES / "golden_puzzle_service.json"
    out.write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {out} (fw={payload['score']['fw']})")


if __name__ == "__main__":
    FIXTURES.mkdir(parents=True, exist_ok=True)
    make_path_a_fixture()
    make_seed42_golden()
    make_service_golden()
