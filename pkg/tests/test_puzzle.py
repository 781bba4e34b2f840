import json

import pytest

from crux.core import make_pair
from crux.grid import Placement, empty_grid, place, score
from crux.puzzle import (
    MissingClue,
    assign_numbering,
    export_puzzle,
    puzzle_from_dict,
    puzzle_to_dict,
)


def cat_axe_grid():
    grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
    return place(grid, Placement("AXE", 0, 1, "down"))


def cat_axe_pairs():
    return [
        make_pair("feline pet", "cat", "manual", "en"),
        make_pair("woodcutter tool", "axe", "manual", "en"),
    ]


class TestAssignNumbering:
    def test_single_word(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        puzzle = assign_numbering(grid, cat_axe_pairs())
        assert puzzle.entries[0].number == 1

    def test_cat_axe_numbering(self):
        puzzle = assign_numbering(cat_axe_grid(), cat_axe_pairs())
        assert [(e.number, e.direction, e.answer) for e in puzzle.entries] == [
            (1, "across", "CAT"),
            (2, "down", "AXE"),
        ]
        assert puzzle.numbers == {(0, 0): 1, (0, 1): 2}

    def test_shared_start_cell_gets_one_number(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        grid = place(grid, Placement("CODA", 0, 0, "down"))
        puzzle = assign_numbering(
            grid,
            cat_axe_pairs() + [make_pair("tail, in music", "coda", "manual", "en")],
        )
        assert puzzle.numbers == {(0, 0): 1}
        assert [(e.number, e.direction) for e in puzzle.entries] == [
            (1, "across"),
            (1, "down"),
        ]

    def test_missing_clue(self):
        with pytest.raises(MissingClue):
            assign_numbering(cat_axe_grid(), cat_axe_pairs()[:1])


class TestExport:
    def test_json_shape(self):
        puzzle = assign_numbering(cat_axe_grid(), cat_axe_pairs())
        data = json.loads(export_puzzle(puzzle, "json"))
        assert data["width"] == 5
        assert len(data["cells"]) == 5
        assert len(data["entries"]) == 2
        assert set(data["score"]) == {"fw", "ll", "fr", "lr", "score"}
        numbered = [c for c in data["cells"] if "number" in c]
        assert len(numbered) == 2

    def test_json_roundtrip(self):
        puzzle = assign_numbering(cat_axe_grid(), cat_axe_pairs())
        data = json.loads(export_puzzle(puzzle, "json"))
        assert puzzle_from_dict(data) == puzzle

    def test_roundtrip_bytes_stable(self):
        puzzle = assign_numbering(cat_axe_grid(), cat_axe_pairs())
        blob = export_puzzle(puzzle, "json")
        again = export_puzzle(puzzle_from_dict(json.loads(blob)), "json")
        assert blob == again

    def test_text_render(self):
        puzzle = assign_numbering(cat_axe_grid(), cat_axe_pairs())
        text = export_puzzle(puzzle, "text").decode("utf-8")
        assert text.splitlines()[0] == "C A T . ."
        assert "ACROSS" in text and "DOWN" in text
        assert "1. feline pet (3)" in text

    def test_empty_puzzle_unrepresentable(self):
        from crux.grid import ScoreBreakdown
        from crux.puzzle import NumberedPuzzle

        with pytest.raises(ValueError):
            NumberedPuzzle(5, 5, {}, {}, (), ScoreBreakdown(0, 0, 0.0, 0.0, 0.0))

    def test_engine_breakdown_is_preserved(self):
        grid = cat_axe_grid()
        breakdown = score(grid, fr_denominator="work_area")
        puzzle = assign_numbering(grid, cat_axe_pairs(), breakdown)
        assert puzzle.score == breakdown
