import json

import pytest
from fastapi.testclient import TestClient

from crux.llm import Gateway, ReplayProvider
from crux.service import create_app

from conftest import FIXTURES
from transcripts import EXPECTED_PAIRS, SCIENCE_PARAGRAPH


@pytest.fixture
def client(tmp_path):
    gateway = Gateway(ReplayProvider(FIXTURES / "path_a_science.jsonl"))
    app = create_app(gateway=gateway, data_dir=tmp_path)
    return TestClient(app)


def create_session(client):
    resp = client.post(
        "/api/pipeline/text", json={"document": SCIENCE_PARAGRAPH, "lang": "it"}
    )
    assert resp.status_code == 200, resp.text
    return resp.json()["session"]


class TestTextPipelineEndpoint:
    def test_creates_session_with_pairs(self, client):
        session = create_session(client)
        assert len(session["pairs"]) == 6
        assert [(p["answer_display"], p["clue"]) for p in session["pairs"]] == EXPECTED_PAIRS
        assert all(p["status"] == "pending" for p in session["pairs"])

    def test_session_is_persisted(self, client):
        session = create_session(client)
        resp = client.get(f"/api/sessions/{session['session_id']}")
        assert resp.status_code == 200
        assert resp.json() == session


class TestSessionEndpoints:
    def test_unknown_session_404(self, client):
        resp = client.get("/api/sessions/nope")
        assert resp.status_code == 404
        assert resp.json()["error_code"] == "UnknownSession"

    def test_accept_pair(self, client):
        session = create_session(client)
        sid = session["session_id"]
        resp = client.patch(
            f"/api/sessions/{sid}/pairs/p0", json={"status": "accepted"}
        )
        assert resp.status_code == 200
        assert resp.json()["status"] == "accepted"

    def test_edit_preserves_original(self, client):
        session = create_session(client)
        sid = session["session_id"]
        resp = client.patch(
            f"/api/sessions/{sid}/pairs/p0", json={"edited_clue": "nuova definizione"}
        )
        body = resp.json()
        assert body["status"] == "edited"
        assert body["edited_clue"] == "nuova definizione"
        assert body["original_clue"] == session["pairs"][0]["clue"]

    def test_invalid_transition_409(self, client):
        session = create_session(client)
        sid = session["session_id"]
        client.patch(f"/api/sessions/{sid}/pairs/p0", json={"status": "rejected"})
        resp = client.patch(
            f"/api/sessions/{sid}/pairs/p0", json={"status": "accepted"}
        )
        assert resp.status_code == 409
        assert resp.json()["error_code"] == "InvalidStatusTransition"

    def test_unknown_pair_404(self, client):
        session = create_session(client)
        resp = client.patch(
            f"/api/sessions/{session['session_id']}/pairs/zzz",
            json={"status": "accepted"},
        )
        assert resp.status_code == 404

    def test_preferred_flag(self, client):
        session = create_session(client)
        sid = session["session_id"]
        resp = client.patch(
            f"/api/sessions/{sid}/pairs/p1", json={"preferred": True}
        )
        assert resp.json()["preferred"] is True


class TestGenerateEndpoint:
    def accept(self, client, sid, pair_ids):
        for pid in pair_ids:
            assert (
                client.patch(
                    f"/api/sessions/{sid}/pairs/{pid}", json={"status": "accepted"}
                ).status_code
                == 200
            )

    def test_generate_without_accepted_pairs_422(self, client):
        session = create_session(client)
        resp = client.post(
            f"/api/sessions/{session['session_id']}/generate", json={}
        )
        assert resp.status_code == 422
        assert resp.json()["error_code"] == "NoSolution"

    def test_full_flow_matches_golden(self, client):
        session = create_session(client)
        sid = session["session_id"]
        self.accept(client, sid, ["p0", "p1", "p2", "p3"])
        resp = client.post(
            f"/api/sessions/{sid}/generate",
            json={
                "width": 15, "height": 15, "min_words": 4, "min_fill": 0.0,
                "max_restarts": 50, "max_duration": 10.0, "seed": 42,
            },
        )
        assert resp.status_code == 200, resp.text
        puzzle_id = resp.json()["puzzle_id"]
        payload = client.get(f"/api/puzzles/{puzzle_id}").json()
        golden = json.loads(
            (FIXTURES / "golden_puzzle_service.json").read_text(encoding="utf-8")
        )
        assert payload == golden

    def test_only_curated_pairs_reach_engine(self, client):
        session = create_session(client)
        sid = session["session_id"]
        self.accept(client, sid, ["p0", "p1", "p2", "p3"])
        client.patch(f"/api/sessions/{sid}/pairs/p4", json={"status": "rejected"})
        resp = client.post(
            f"/api/sessions/{sid}/generate",
            json={"min_words": 2, "min_fill": 0.0, "seed": 1},
        )
        puzzle = client.get(f"/api/puzzles/{resp.json()['puzzle_id']}").json()
        answers = {e["answer"] for e in puzzle["entries"]}
        accepted = {
            p["answer_grid"]
            for p in client.get(f"/api/sessions/{sid}").json()["pairs"]
            if p["status"] == "accepted"
        }
        assert answers <= accepted

    def test_text_export(self, client):
        session = create_session(client)
        sid = session["session_id"]
        self.accept(client, sid, ["p0", "p1", "p2", "p3"])
        resp = client.post(
            f"/api/sessions/{sid}/generate",
            json={"min_words": 2, "min_fill": 0.0, "seed": 42},
        )
        puzzle_id = resp.json()["puzzle_id"]
        resp = client.get(f"/api/puzzles/{puzzle_id}", params={"format": "text"})
        assert resp.status_code == 200
        assert "ACROSS" in resp.text

    def test_unknown_puzzle_404(self, client):
        resp = client.get("/api/puzzles/nope")
        assert resp.status_code == 404
        assert resp.json()["error_code"] == "UnknownPuzzle"


class TestKeywordPipelineEndpoint:
    def test_creates_session(self, tmp_path):
        from crux.llm import ScriptedProvider

        gateway = Gateway(
            ScriptedProvider(
                [
                    "Mitologia: La conosce chi conosce i miti",
                    "Curiosità: Il desiderio di sapere",
                ]
            )
        )
        client = TestClient(create_app(gateway=gateway, data_dir=tmp_path))
        resp = client.post(
            "/api/pipeline/keywords",
            json={"keywords": ["Mitologia", "Curiosità"], "n": 1},
        )
        assert resp.status_code == 200
        pairs = resp.json()["session"]["pairs"]
        assert [p["answer_grid"] for p in pairs] == ["MITOLOGIA", "CURIOSITA"]
        assert all(p["source"] == "path_b" for p in pairs)
