"""Open-grid crossword model: placements, legality, incremental scoring,
undo, and an independent brute-force validity/score oracle.

The grid is sparse: only filled cells are stored. Words interlock via
crossings; there are no blocked cells.

Score = (FW + 0.5·LL) · FR · LR, where FW is the number of placed words,
LL the number of cells shared by two crossing words, FR the filled-cell
count divided by the bounding-rectangle area, and LR = LL / filled cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .core import CruxError

Direction = Literal["across", "down"]
Cell = tuple[int, int]


class AnswerTooLong(CruxError):
    pass


class AnswerTooShort(CruxError):
    pass


class IllegalPlacement(CruxError):
    pass


class TooMany(CruxError):
    pass


@dataclass(frozen=True)
class Placement:
    answer_grid: str
    row: int
    col: int
    direction: Direction

    def cells(self) -> Iterator[tuple[Cell, str]]:
        dr, dc = (0, 1) if self.direction == "across" else (1, 0)
        for i, letter in enumerate(self.answer_grid):
            yield (self.row + i * dr, self.col + i * dc), letter

    @property
    def start(self) -> Cell:
        return (self.row, self.col)


@dataclass(frozen=True)
class ScoreBreakdown:
    fw: int
    ll: int
    fr: float
    lr: float
    score: float

    def to_dict(self) -> dict:
        return {
            "fw": self.fw,
            "ll": self.ll,
            "fr": self.fr,
            "lr": self.lr,
            "score": self.score,
        }


@dataclass(frozen=True)
class Grid:
    width: int
    height: int
    cells: dict[Cell, str] = field(default_factory=dict)
    placements: tuple[Placement, ...] = ()

    def coverage(self) -> dict[Cell, list[Direction]]:
        cov: dict[Cell, list[Direction]] = {}
        for pl in self.placements:
            for cell, _ in pl.cells():
                cov.setdefault(cell, []).append(pl.direction)
        return cov

    def bounding_box(self) -> tuple[int, int, int, int] | None:
        """(min_row, min_col, max_row, max_col) of filled cells, or None."""
        if not self.cells:
            return None
        rows = [r for r, _ in self.cells]
        cols = [c for _, c in self.cells]
        return (min(rows), min(cols), max(rows), max(cols))


def empty_grid(width: int, height: int) -> Grid:
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be >= 1")
    return Grid(width, height)


def _fits(grid: Grid, placement: Placement) -> bool:
    length = len(placement.answer_grid)
    if placement.row < 0 or placement.col < 0:
        return False
    if placement.direction == "across":
        return (
            placement.row < grid.height
            and placement.col + length <= grid.width
        )
    return placement.col < grid.width and placement.row + length <= grid.height


def _check_placement(
    grid: Grid,
    placement: Placement,
    coverage: dict[Cell, list[Direction]],
) -> int | None:
    """Return the crossing count if the placement is legal, else None.

    Legality: fits the work area; the cells immediately before and after
    the word are empty; every overlap cell matches letters and crosses a
    perpendicular word; every new cell has empty perpendicular neighbors
    (no accidental words); non-empty grids require >= 1 crossing.
    """
    if not _fits(grid, placement):
        return None
    r, c = placement.row, placement.col
    length = len(placement.answer_grid)
    if placement.direction == "across":
        before, after = (r, c - 1), (r, c + length)
        side = lambda rr, cc: ((rr - 1, cc), (rr + 1, cc))
        step = lambda i: (r, c + i)
    else:
        before, after = (r - 1, c), (r + length, c)
        side = lambda rr, cc: ((rr, cc - 1), (rr, cc + 1))
        step = lambda i: (r + i, c)
    if before in grid.cells or after in grid.cells:
        return None
    crossings = 0
    for i, letter in enumerate(placement.answer_grid):
        cell = step(i)
        existing = grid.cells.get(cell)
        if existing is not None:
            if existing != letter:
                return None
            if placement.direction in coverage.get(cell, []):
                return None  # same-direction overlap
            crossings += 1
        else:
            s1, s2 = side(*cell)
            if s1 in grid.cells or s2 in grid.cells:
                return None
    if grid.cells and crossings == 0:
        return None
    return crossings


def legal_placements(grid: Grid, answer: str) -> list[tuple[Placement, int]]:
    """All legal placements of the answer, with their crossing counts.

    Ordered deterministically: across before down, then row-major start.
    """
    length = len(answer)
    if length < 2:
        raise AnswerTooShort(answer)
    if length > max(grid.width, grid.height):
        raise AnswerTooLong(answer)
    coverage = grid.coverage()
    candidates: set[Placement] = set()
    if not grid.cells:
        for direction in ("across", "down"):
            max_r = grid.height - (1 if direction == "across" else length)
            max_c = grid.width - (length if direction == "across" else 1)
            for r in range(max_r + 1):
                for c in range(max_c + 1):
                    candidates.add(Placement(answer, r, c, direction))
    else:
        # A legal placement must cross a filled cell: anchor enumeration.
        for (r, c), letter in grid.cells.items():
            for i, ch in enumerate(answer):
                if ch != letter:
                    continue
                candidates.add(Placement(answer, r, c - i, "across"))
                candidates.add(Placement(answer, r - i, c, "down"))
    out = []
    for pl in candidates:
        crossings = _check_placement(grid, pl, coverage)
        if crossings is not None:
            out.append((pl, crossings))
    out.sort(key=lambda t: (t[0].direction, t[0].row, t[0].col))
    return out


def place(grid: Grid, placement: Placement) -> Grid:
    """Return a new grid with the placement added; legality is re-checked."""
    crossings = _check_placement(grid, placement, grid.coverage())
    if crossings is None:
        raise IllegalPlacement(f"{placement} is not legal on this grid")
    cells = dict(grid.cells)
    for cell, letter in placement.cells():
        cells[cell] = letter
    return Grid(grid.width, grid.height, cells, grid.placements + (placement,))


def remove_last(grid: Grid, k: int) -> Grid:
    """Undo the last k placements by replaying the survivors from scratch."""
    if k > len(grid.placements):
        raise TooMany(f"cannot remove {k} of {len(grid.placements)} placements")
    out = empty_grid(grid.width, grid.height)
    for pl in grid.placements[: len(grid.placements) - k]:
        out = place(out, pl)
    return out


def score(grid: Grid, fr_denominator: str = "bbox") -> ScoreBreakdown:
    """Incremental score from the grid's placements and cells.

    Letters are distinct filled cells (a crossing counts once). FR divides
    by the bounding box of filled cells, or the full work area when
    fr_denominator="work_area".
    """
    fw = len(grid.placements)
    counts: dict[Cell, int] = {}
    for pl in grid.placements:
        for cell, _ in pl.cells():
            counts[cell] = counts.get(cell, 0) + 1
    ll = sum(1 for n in counts.values() if n == 2)
    letters = len(grid.cells)
    if letters == 0:
        return ScoreBreakdown(fw, ll, 0.0, 0.0, 0.0)
    if fr_denominator == "work_area":
        area = grid.width * grid.height
    else:
        min_r, min_c, max_r, max_c = grid.bounding_box()
        area = (max_r - min_r + 1) * (max_c - min_c + 1)
    fr = letters / area
    lr = ll / letters
    return ScoreBreakdown(fw, ll, fr, lr, (fw + 0.5 * ll) * fr * lr)


@dataclass(frozen=True)
class OracleVerdict:
    ok: bool
    problems: tuple[str, ...]
    breakdown: ScoreBreakdown | None


def _scan_runs(grid: Grid) -> tuple[list[tuple[Cell, Direction, str]], dict[Cell, int]]:
    """Maximal horizontal/vertical runs of length >= 2, by raw cell scan.

    Also returns, per cell, how many runs cover it.
    """
    runs: list[tuple[Cell, Direction, str]] = []
    run_cover: dict[Cell, int] = {cell: 0 for cell in grid.cells}
    for direction, (dr, dc) in (("across", (0, 1)), ("down", (1, 0))):
        for (r, c) in grid.cells:
            if (r - dr, c - dc) in grid.cells:
                continue  # not a run start
            word = []
            rr, cc = r, c
            while (rr, cc) in grid.cells:
                word.append(grid.cells[(rr, cc)])
                rr, cc = rr + dr, cc + dc
            if len(word) >= 2:
                runs.append(((r, c), direction, "".join(word)))
                for i in range(len(word)):
                    run_cover[(r + i * dr, c + i * dc)] += 1
    return runs, run_cover


def validity_oracle(
    grid: Grid, pool: list[str], fr_denominator: str = "bbox"
) -> OracleVerdict:
    """Re-derive grid validity and score from the cells alone.

    Checks that every maximal run >= 2 is a pool answer, every cell belongs
    to a run, placements agree with cells, the crossing structure is
    connected, and the from-scratch score matches the incremental one.
    """
    problems: list[str] = []
    pool_set = set(pool)
    runs, run_cover = _scan_runs(grid)
    for start, direction, word in runs:
        if word not in pool_set:
            problems.append(f"run {word!r} {direction} at {start} is not a pool answer")
    for cell, n in run_cover.items():
        if n == 0:
            problems.append(f"cell {cell} belongs to no run")
        elif n > 2:
            problems.append(f"cell {cell} covered by {n} runs")
    for pl in grid.placements:
        for cell, letter in pl.cells():
            if grid.cells.get(cell) != letter:
                problems.append(f"placement {pl} disagrees with cell {cell}")
    run_keys = {(start, direction) for start, direction, _ in runs}
    placement_keys = {(pl.start, pl.direction) for pl in grid.placements}
    if len(grid.placements) > 1 or any(
        len(pl.answer_grid) >= 2 for pl in grid.placements
    ):
        if run_keys != placement_keys:
            problems.append(
                f"runs {sorted(run_keys)} do not match placements {sorted(placement_keys)}"
            )
    # Connectivity under the crossing relation.
    if grid.placements:
        adjacency: dict[int, set[int]] = {i: set() for i in range(len(grid.placements))}
        cell_owner: dict[Cell, list[int]] = {}
        for i, pl in enumerate(grid.placements):
            for cell, _ in pl.cells():
                cell_owner.setdefault(cell, []).append(i)
        for owners in cell_owner.values():
            for a in owners:
                for b in owners:
                    if a != b:
                        adjacency[a].add(b)
        seen = {0}
        stack = [0]
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != len(grid.placements):
            problems.append("crossing graph is not connected")
    # From-scratch score, using only cells and scanned runs.
    fw = len(runs)
    letters = len(grid.cells)
    ll = sum(1 for n in run_cover.values() if n == 2)
    if letters == 0:
        recomputed = ScoreBreakdown(fw, ll, 0.0, 0.0, 0.0)
    else:
        if fr_denominator == "work_area":
            area = grid.width * grid.height
        else:
            min_r, min_c, max_r, max_c = grid.bounding_box()
            area = (max_r - min_r + 1) * (max_c - min_c + 1)
        fr = letters / area
        lr = ll / letters
        recomputed = ScoreBreakdown(fw, ll, fr, lr, (fw + 0.5 * ll) * fr * lr)
    incremental = score(grid, fr_denominator)
    if not _breakdowns_match(incremental, recomputed):
        problems.append(
            f"incremental score {incremental} != recomputed {recomputed}"
        )
    return OracleVerdict(not problems, tuple(problems), recomputed)


def _breakdowns_match(a: ScoreBreakdown, b: ScoreBreakdown, tol: float = 1e-12) -> bool:
    return (
        a.fw == b.fw
        and a.ll == b.ll
        and math.isclose(a.fr, b.fr, rel_tol=0, abs_tol=tol)
        and math.isclose(a.lr, b.lr, rel_tol=0, abs_tol=tol)
        and math.isclose(a.score, b.score, rel_tol=0, abs_tol=tol)
    )
