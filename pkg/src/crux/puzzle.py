"""Across/down numbering and puzzle export (JSON and printable text)."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import ClueAnswerPair, CruxError
from .grid import Grid, ScoreBreakdown


class MissingClue(CruxError):
    pass


@dataclass(frozen=True)
class Entry:
    number: int
    direction: str
    row: int
    col: int
    answer: str
    clue: str


@dataclass(frozen=True)
class NumberedPuzzle:
    width: int
    height: int
    cells: dict[tuple[int, int], str]
    numbers: dict[tuple[int, int], int]
    entries: tuple[Entry, ...]
    score: ScoreBreakdown

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a puzzle must contain at least one entry")


def assign_numbering(
    grid: Grid,
    pairs: list[ClueAnswerPair],
    breakdown: ScoreBreakdown | None = None,
) -> NumberedPuzzle:
    """Number the grid row-major: a cell gets the next number iff it starts
    an across or a down placement; entries sorted by (number, direction)."""
    clues = {p.answer_grid: p.clue for p in pairs}
    for pl in grid.placements:
        if pl.answer_grid not in clues:
            raise MissingClue(pl.answer_grid)
    starts: dict[tuple[int, int], list] = {}
    for pl in grid.placements:
        starts.setdefault(pl.start, []).append(pl)
    numbers: dict[tuple[int, int], int] = {}
    next_number = 1
    for r in range(grid.height):
        for c in range(grid.width):
            if (r, c) in starts:
                numbers[(r, c)] = next_number
                next_number += 1
    entries = [
        Entry(
            numbers[pl.start],
            pl.direction,
            pl.row,
            pl.col,
            pl.answer_grid,
            clues[pl.answer_grid],
        )
        for pl in grid.placements
    ]
    entries.sort(key=lambda e: (e.number, e.direction))
    return NumberedPuzzle(
        grid.width,
        grid.height,
        dict(grid.cells),
        numbers,
        tuple(entries),
        breakdown if breakdown is not None else _score_of(grid),
    )


def _score_of(grid: Grid) -> ScoreBreakdown:
    from .grid import score

    return score(grid)


def puzzle_to_dict(p: NumberedPuzzle) -> dict:
    cells = []
    for (r, c) in sorted(p.cells):
        cell: dict = {"row": r, "col": c, "letter": p.cells[(r, c)]}
        if (r, c) in p.numbers:
            cell["number"] = p.numbers[(r, c)]
        cells.append(cell)
    return {
        "width": p.width,
        "height": p.height,
        "cells": cells,
        "entries": [
            {
                "number": e.number,
                "direction": e.direction,
                "row": e.row,
                "col": e.col,
                "answer": e.answer,
                "clue": e.clue,
            }
            for e in p.entries
        ],
        "score": p.score.to_dict(),
    }


def puzzle_from_dict(data: dict) -> NumberedPuzzle:
    cells = {(c["row"], c["col"]): c["letter"] for c in data["cells"]}
    numbers = {
        (c["row"], c["col"]): c["number"] for c in data["cells"] if "number" in c
    }
    entries = tuple(
        Entry(e["number"], e["direction"], e["row"], e["col"], e["answer"], e["clue"])
        for e in data["entries"]
    )
    s = data["score"]
    return NumberedPuzzle(
        data["width"],
        data["height"],
        cells,
        numbers,
        entries,
        ScoreBreakdown(s["fw"], s["ll"], s["fr"], s["lr"], s["score"]),
    )


def export_puzzle(p: NumberedPuzzle, format: str = "json") -> bytes:
    """Serialize the puzzle. JSON is canonical (stable key order, indent 2);
    text renders the grid with '.' for empty cells plus numbered clue lists."""
    if format == "json":
        return (
            json.dumps(puzzle_to_dict(p), ensure_ascii=False, indent=2) + "\n"
        ).encode("utf-8")
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = []
    for r in range(p.height):
        lines.append(
            " ".join(p.cells.get((r, c), ".") for c in range(p.width))
        )
    lines.append("")
    for direction, title in (("across", "ACROSS"), ("down", "DOWN")):
        section = [e for e in p.entries if e.direction == direction]
        if section:
            lines.append(title)
            for e in section:
                lines.append(f"{e.number}. {e.clue} ({len(e.answer)})")
            lines.append("")
    return "\n".join(lines).encode("utf-8")
