"""crux: educational crossword toolkit.

Clue-answer pipelines (from text or bare keywords), corpus tools, a
score-driven open-grid layout engine, and a curation HTTP service.
"""

from .core import (
    ClueAnswerPair,
    EvalMetrics,
    QualityVerdict,
    clue_contains_answer,
    compute_metrics,
    make_pair,
    normalize_answer,
)
from .generator import GenerationConfig, GenerationResult, NoSolution, generate
from .grid import (
    Grid,
    Placement,
    ScoreBreakdown,
    empty_grid,
    legal_placements,
    place,
    remove_last,
    score,
    validity_oracle,
)
from .puzzle import NumberedPuzzle, assign_numbering, export_puzzle

__all__ = [
    "ClueAnswerPair",
    "EvalMetrics",
    "QualityVerdict",
    "clue_contains_answer",
    "compute_metrics",
    "make_pair",
    "normalize_answer",
    "GenerationConfig",
    "GenerationResult",
    "NoSolution",
    "generate",
    "Grid",
    "Placement",
    "ScoreBreakdown",
    "empty_grid",
    "legal_placements",
    "place",
    "remove_last",
    "score",
    "validity_oracle",
    "NumberedPuzzle",
    "assign_numbering",
    "export_puzzle",
]

__version__ = "0.1.0"
