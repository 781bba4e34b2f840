"""Score-driven grid construction: seeded add/remove/restart search with
preferred-answer weighting, stopping criteria, and best-of selection.

The RNG is Python's random.Random (Mersenne Twister), which is stable
across platforms and versions, so seeded runs and golden files reproduce
anywhere.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .core import ClueAnswerPair, CruxError
from .grid import (
    Grid,
    Placement,
    ScoreBreakdown,
    empty_grid,
    legal_placements,
    place,
    remove_last,
    score,
)


class NoSolution(CruxError):
    pass


@dataclass(frozen=True)
class GenerationConfig:
    width: int = 15
    height: int = 15
    min_words: int = 8
    min_fill_ratio: float = 0.35
    max_restarts: int = 50
    max_duration: float = 10.0  # seconds
    preferred_weight: float = 5.0
    removal_probability: float = 0.3
    seed: int = 0
    fr_denominator: str = "bbox"  # or "work_area"

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("work area dimensions must be positive")
        if self.preferred_weight < 1:
            raise ValueError("preferred_weight must be >= 1")
        if not 0 <= self.removal_probability <= 1:
            raise ValueError("removal_probability must be in [0, 1]")
        if (
            self.min_words <= 0
            and self.min_fill_ratio <= 0
            and self.max_restarts <= 0
            and self.max_duration <= 0
        ):
            raise ValueError("at least one stopping criterion must be active")


@dataclass
class SearchState:
    fw: int
    fill_ratio: float
    restarts: int
    started_at: float


def check_stop(
    state: SearchState,
    config: GenerationConfig,
    clock: Callable[[], float] = time.monotonic,
) -> str:
    """One of "continue", "stop_success", "stop_budget".

    Success needs both word-count and fill-ratio thresholds on the current
    candidate; budget stops on restarts strictly exceeding max_restarts or
    on elapsed wall time.
    """
    if state.fw >= config.min_words and state.fill_ratio >= config.min_fill_ratio:
        return "stop_success"
    if state.restarts > config.max_restarts:
        return "stop_budget"
    if clock() - state.started_at >= config.max_duration:
        return "stop_budget"
    return "continue"


@dataclass(frozen=True)
class TraceEntry:
    attempt: int
    fw: int
    score: float


@dataclass(frozen=True)
class GenerationResult:
    grid: Grid
    breakdown: ScoreBreakdown
    trace: tuple[TraceEntry, ...]
    restarts: int
    elapsed: float


def _weighted_order(
    rng: random.Random, items: list[str], weight_of: Callable[[str], float]
) -> list[str]:
    """Sample items without replacement, probability proportional to weight."""
    pool = list(items)
    order = []
    while pool:
        weights = [weight_of(x) for x in pool]
        idx = rng.choices(range(len(pool)), weights=weights)[0]
        order.append(pool.pop(idx))
    return order


def _place_first(
    grid: Grid, answer: str, rng: random.Random
) -> Grid | None:
    """Place the opening answer with its middle letter closest to center."""
    options = legal_placements(grid, answer)
    if not options:
        return None
    center_r = (grid.height - 1) / 2
    center_c = (grid.width - 1) / 2
    mid = len(answer) // 2

    def mid_cell(pl: Placement) -> tuple[float, float]:
        if pl.direction == "across":
            return (pl.row, pl.col + mid)
        return (pl.row + mid, pl.col)

    def dist(pl: Placement) -> float:
        r, c = mid_cell(pl)
        return (r - center_r) ** 2 + (c - center_c) ** 2

    best = min(dist(pl) for pl, _ in options)
    ties = [pl for pl, _ in options if math.isclose(dist(pl), best)]
    return place(grid, rng.choice(ties))


def _pick_placement(
    options: list[tuple[Placement, int]], rng: random.Random
) -> Placement:
    """Highest-crossings placement, seeded tie-breaking."""
    top = max(crossings for _, crossings in options)
    ties = [pl for pl, crossings in options if crossings == top]
    return rng.choice(ties)


def generate(
    pool: list[ClueAnswerPair],
    preferred: set[str] | None = None,
    config: GenerationConfig = GenerationConfig(),
    clock: Callable[[], float] = time.monotonic,
) -> GenerationResult:
    """Build the best grid the budget allows from the answer pool.

    Each attempt starts from a centrally placed answer and grows the grid
    by crossing placements; stuck steps either remove 1-3 recent words
    (with probability removal_probability) or count a restart. Every
    completed candidate is scored; the highest score wins.
    """
    answers: list[str] = []
    seen = set()
    for pair in pool:
        if pair.answer_grid not in seen:
            seen.add(pair.answer_grid)
            answers.append(pair.answer_grid)
    if len(answers) < 2:
        raise NoSolution(f"answer pool has {len(answers)} unique answers; need >= 2")
    preferred = {a for a in (preferred or set())}
    rng = random.Random(config.seed)
    started = clock()

    def weight_of(answer: str) -> float:
        return config.preferred_weight if answer in preferred else 1.0

    trace: list[TraceEntry] = []
    best_grid: Grid | None = None
    best_breakdown: ScoreBreakdown | None = None
    restarts = 0
    attempt = 0
    done = False

    while not done:
        attempt += 1
        grid = empty_grid(config.width, config.height)
        for first in _weighted_order(rng, answers, weight_of):
            if len(first) <= max(config.width, config.height):
                placed_grid = _place_first(grid, first, rng)
                if placed_grid is not None:
                    grid = placed_grid
                    break
        candidate_done = False
        while not candidate_done:
            breakdown = score(grid, config.fr_denominator)
            state = SearchState(breakdown.fw, breakdown.fr, restarts, started)
            status = check_stop(state, config, clock)
            if status != "continue":
                candidate_done = True
                done = True
                break
            placed_set = {pl.answer_grid for pl in grid.placements}
            remaining = [a for a in answers if a not in placed_set]
            if not remaining:
                # Pool exhausted without meeting the success thresholds:
                # the next attempt is a rebuild from scratch.
                restarts += 1
                candidate_done = True
                break
            placed_one = False
            for candidate in _weighted_order(rng, remaining, weight_of):
                if len(candidate) > max(config.width, config.height):
                    continue
                options = legal_placements(grid, candidate)
                if options:
                    grid = place(grid, _pick_placement(options, rng))
                    placed_one = True
                    break
            if placed_one:
                continue
            # Stuck: no remaining answer fits anywhere.
            if (
                len(grid.placements) > 1
                and rng.random() < config.removal_probability
            ):
                k = min(rng.randint(1, 3), len(grid.placements) - 1)
                grid = remove_last(grid, k)
            else:
                restarts += 1
                candidate_done = True
        breakdown = score(grid, config.fr_denominator)
        trace.append(TraceEntry(attempt, breakdown.fw, breakdown.score))
        if best_breakdown is None or breakdown.score > best_breakdown.score:
            best_grid, best_breakdown = grid, breakdown
        if restarts > config.max_restarts:
            done = True

    elapsed = clock() - started
    if best_grid is None or best_breakdown.fw < 2:
        raise NoSolution("no candidate with at least two crossing words")
    return GenerationResult(
        best_grid, best_breakdown, tuple(trace), restarts, elapsed
    )
