import random

import pytest

from crux.grid import (
    AnswerTooLong,
    AnswerTooShort,
    Grid,
    IllegalPlacement,
    Placement,
    TooMany,
    empty_grid,
    legal_placements,
    place,
    remove_last,
    score,
    validity_oracle,
)

from conftest import ITALIAN_30, random_place_remove_grid


def brute_force_legal(grid: Grid, answer: str):
    """Independent legality oracle: try every position, simulate, and scan
    the whole resulting grid for run and overlap violations."""
    results = []
    placed_answers = [pl.answer_grid for pl in grid.placements]
    coverage = grid.coverage()
    for direction in ("across", "down"):
        for r in range(grid.height):
            for c in range(grid.width):
                pl = Placement(answer, r, c, direction)
                cells = dict(pl.cells())
                if any(
                    rr < 0 or cc < 0 or rr >= grid.height or cc >= grid.width
                    for rr, cc in cells
                ):
                    continue
                if any(
                    grid.cells.get(cell, letter) != letter
                    for cell, letter in cells.items()
                ):
                    continue
                overlaps = [cell for cell in cells if cell in grid.cells]
                if grid.cells and not overlaps:
                    continue
                if any(direction in coverage.get(cell, []) for cell in overlaps):
                    continue
                merged = dict(grid.cells)
                merged.update(cells)
                if not runs_ok(merged, placed_answers + [answer]):
                    continue
                results.append((pl, len(overlaps)))
    return sorted(results, key=lambda t: (t[0].direction, t[0].row, t[0].col))


def runs_ok(cells, allowed_words):
    allowed = {}
    for w in allowed_words:
        allowed[w] = allowed.get(w, 0) + 1
    found = []
    for dr, dc in ((0, 1), (1, 0)):
        for (r, c) in cells:
            if (r - dr, c - dc) in cells:
                continue
            word = []
            rr, cc = r, c
            while (rr, cc) in cells:
                word.append(cells[(rr, cc)])
                rr, cc = rr + dr, cc + dc
            if len(word) >= 2:
                found.append("".join(word))
    # every run must be an allowed word, and each word placed at most once
    counts = {}
    for w in found:
        counts[w] = counts.get(w, 0) + 1
    if any(w not in allowed or counts[w] > allowed[w] for w in counts):
        return False
    # every word must appear as a run exactly as many times as placed
    return sorted(found) == sorted(
        w for w in allowed_words
    )


class TestLegalPlacements:
    def test_empty_grid_full_enumeration(self):
        grid = empty_grid(5, 5)
        options = legal_placements(grid, "CAT")
        assert len(options) == 30
        assert all(c == 0 for _, c in options)
        assert len([1 for pl, _ in options if pl.direction == "across"]) == 15

    def test_too_long(self):
        with pytest.raises(AnswerTooLong):
            legal_placements(empty_grid(5, 5), "STREET")

    def test_too_short(self):
        with pytest.raises(AnswerTooShort):
            legal_placements(empty_grid(5, 5), "A")

    def test_crossing_placement(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        options = legal_placements(grid, "AXE")
        assert (Placement("AXE", 0, 1, "down"), 1) in options

    def test_matches_brute_force_on_random_grids(self):
        rng = random.Random(99)
        for trial in range(25):
            grid = random_place_remove_grid(rng, ITALIAN_30, 9, 9, steps=8)
            answer = rng.choice([w for w in ITALIAN_30 if len(w) <= 9])
            assert legal_placements(grid, answer) == brute_force_legal(grid, answer)


class TestPlace:
    def test_single_word(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        assert len(grid.cells) == 3
        assert grid.cells[(0, 1)] == "A"

    def test_crossing_cells_shared(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        grid = place(grid, Placement("AXE", 0, 1, "down"))
        assert len(grid.cells) == 5

    def test_mismatched_overlap_rejected(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        with pytest.raises(IllegalPlacement):
            place(grid, Placement("XYZ", 0, 1, "down"))

    def test_original_grid_unmodified(self):
        grid = empty_grid(5, 5)
        place(grid, Placement("CAT", 0, 0, "across"))
        assert grid.cells == {}


class TestRemoveLast:
    def test_undo_identity(self):
        g1 = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        g2 = place(g1, Placement("AXE", 0, 1, "down"))
        assert remove_last(g2, 1) == g1

    def test_remove_all(self):
        g1 = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        assert remove_last(g1, 1) == empty_grid(5, 5)

    def test_too_many(self):
        with pytest.raises(TooMany):
            remove_last(empty_grid(5, 5), 1)

    def test_replay_oracle_on_random_sequences(self):
        rng = random.Random(5)
        for trial in range(50):
            grid = random_place_remove_grid(rng, ITALIAN_30, 11, 11, steps=20)
            replayed = empty_grid(11, 11)
            for pl in grid.placements:
                replayed = place(replayed, pl)
            assert replayed == grid


class TestScore:
    def test_empty_grid(self):
        s = score(empty_grid(5, 5))
        assert (s.fw, s.ll, s.fr, s.lr, s.score) == (0, 0, 0.0, 0.0, 0.0)

    def test_single_word_scores_zero(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        s = score(grid)
        assert s.fw == 1
        assert s.fr == 1.0  # 3 letters in a 1x3 box
        assert s.lr == 0.0
        assert s.score == 0.0

    def test_cat_axe_cross(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        grid = place(grid, Placement("AXE", 0, 1, "down"))
        s = score(grid)
        assert s.fw == 2
        assert s.ll == 1
        assert s.fr == pytest.approx(5 / 9, abs=1e-15)
        assert s.lr == pytest.approx(1 / 5, abs=1e-15)
        assert s.score == pytest.approx(25 / 90, abs=1e-15)

    def test_work_area_denominator(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        s = score(grid, fr_denominator="work_area")
        assert s.fr == pytest.approx(3 / 25)

    def test_score_composition_identity(self):
        rng = random.Random(13)
        for trial in range(50):
            grid = random_place_remove_grid(rng, ITALIAN_30, 11, 11, steps=25)
            s = score(grid)
            assert s.score == pytest.approx((s.fw + 0.5 * s.ll) * s.fr * s.lr, abs=1e-15)


class TestValidityOracle:
    def test_valid_construction(self):
        grid = place(empty_grid(5, 5), Placement("CAT", 0, 0, "across"))
        grid = place(grid, Placement("AXE", 0, 1, "down"))
        verdict = validity_oracle(grid, ["CAT", "AXE"])
        assert verdict.ok, verdict.problems

    def test_accidental_run_reported(self):
        # hand-built invalid grid: adjacent parallel words form 2-letter runs
        cells = {(0, 0): "C", (0, 1): "A", (0, 2): "T", (1, 0): "A", (1, 1): "X", (1, 2): "E"}
        grid = Grid(
            5,
            5,
            cells,
            (Placement("CAT", 0, 0, "across"), Placement("AXE", 1, 0, "across")),
        )
        verdict = validity_oracle(grid, ["CAT", "AXE"])
        assert not verdict.ok
        assert any("run" in p for p in verdict.problems)

    def test_incremental_equals_oracle_on_random_grids(self):
        rng = random.Random(21)
        for trial in range(200):
            grid = random_place_remove_grid(rng, ITALIAN_30, 11, 11, steps=15)
            verdict = validity_oracle(grid, ITALIAN_30)
            assert verdict.ok, verdict.problems
