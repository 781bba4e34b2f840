"""Shared vocabulary types, answer normalization, and classification metrics."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Literal

Source = Literal["corpus", "path_a", "path_b", "manual"]
Language = Literal["it", "en"]
Label = Literal["acceptable", "unacceptable", "unlabeled"]

# Characters dropped outright during normalization (word separators and
# typographic joiners that have no grid cell).
_DROPPED = set(" \t-'’‘­")


class CruxError(Exception):
    """Base class for all toolkit errors."""


class EmptyAnswer(CruxError):
    """Nothing remains of the answer after normalization."""


class UnmappableCharacter(CruxError):
    """The answer contains a character with no A-Z grid form."""

    def __init__(self, char: str, raw: str):
        self.char = char
        self.raw = raw
        super().__init__(f"cannot map character {char!r} in answer {raw!r}")


class LengthMismatch(CruxError):
    pass


class EmptyInput(CruxError):
    pass


def normalize_answer(raw: str) -> str:
    """Fold a display-form answer into its grid form (uppercase A-Z only).

    Spaces, hyphens, and apostrophes are removed; accented Latin letters
    are folded to their base letter (e.g. à→A, é→E). Idempotent.
    """
    text = raw.strip()
    out = []
    for ch in text:
        if ch in _DROPPED:
            continue
        folded = unicodedata.normalize("NFD", ch)
        base = "".join(c for c in folded if not unicodedata.combining(c))
        for c in base:
            up = c.upper()
            if "A" <= up <= "Z":
                out.append(up)
            else:
                raise UnmappableCharacter(ch, raw)
    if not out:
        raise EmptyAnswer(f"answer {raw!r} is empty after normalization")
    return "".join(out)


def fold_clue(clue: str) -> str:
    """Normalize a clue for containment checks: accents folded, uppercased,
    non-letters removed. Same letter alphabet as normalize_answer."""
    out = []
    for ch in clue:
        folded = unicodedata.normalize("NFD", ch)
        for c in folded:
            if unicodedata.combining(c):
                continue
            up = c.upper()
            if "A" <= up <= "Z":
                out.append(up)
    return "".join(out)


def clue_contains_answer(clue: str, answer_grid: str) -> bool:
    """True when the clue contains the answer as a case/accent-insensitive
    substring after normalization (the self-containment rule)."""
    return answer_grid in fold_clue(clue)


@dataclass(frozen=True)
class ClueAnswerPair:
    """A crossword clue with its display-form and grid-form answer."""

    clue: str
    answer_display: str
    answer_grid: str
    source: Source
    language: Language
    label: Label = "unlabeled"

    def __post_init__(self):
        if self.answer_grid != normalize_answer(self.answer_display):
            raise ValueError(
                f"answer_grid {self.answer_grid!r} is not the normalization "
                f"of {self.answer_display!r}"
            )


def make_pair(
    clue: str,
    answer_display: str,
    source: Source,
    language: Language,
    label: Label = "unlabeled",
) -> ClueAnswerPair:
    """Build a ClueAnswerPair, deriving the grid form from the display form."""
    return ClueAnswerPair(
        clue=clue,
        answer_display=answer_display,
        answer_grid=normalize_answer(answer_display),
        source=source,
        language=language,
        label=label,
    )


@dataclass(frozen=True)
class QualityVerdict:
    accepted: bool
    judge_id: str
    rationale: str | None = None


@dataclass(frozen=True)
class EvalMetrics:
    accuracy: float
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    tn: int
    fn: int


def compute_metrics(predictions: list[bool], labels: list[bool]) -> EvalMetrics:
    """Binary classification metrics; True means acceptable.

    Precision, recall, and F1 are defined as 0 when their denominator is 0.
    """
    if len(predictions) != len(labels):
        raise LengthMismatch(
            f"{len(predictions)} predictions vs {len(labels)} labels"
        )
    if not predictions:
        raise EmptyInput("no samples")
    tp = fp = tn = fn = 0
    for pred, lab in zip(predictions, labels):
        if pred and lab:
            tp += 1
        elif pred and not lab:
            fp += 1
        elif not pred and lab:
            fn += 1
        else:
            tn += 1
    total = tp + fp + tn + fn
    accuracy = (tp + tn) / total
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall
        else 0.0
    )
    return EvalMetrics(accuracy, precision, recall, f1, tp, fp, tn, fn)
