"""Keyword-to-clue pipeline: candidate clue generation from a bare keyword
plus an acceptability judge with pluggable backends."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Literal

from .core import (
    ClueAnswerPair,
    EvalMetrics,
    Language,
    QualityVerdict,
    clue_contains_answer,
    compute_metrics,
    make_pair,
    normalize_answer,
)
from .llm.gateway import CompletionParams, Gateway
from .pipeline_text import ParseFailure

# Reference performance figures for the original fine-tuned generator and
# classifier backends this module's defaults emulate. Documented for
# comparison only; nothing in the test suite asserts them.
REFERENCE_ACCEPTABLE_CLUE_RATE = {"davinci": 0.601, "curie": 0.349}
REFERENCE_CLASSIFIER_ACCURACY = {
    "davinci": 0.7988,
    "curie": 0.7782,
    "babbage": 0.7412,
    "ada": 0.6917,
    "bert-uncased-base": 0.6562,
}

# Fallback few-shot exemplars used when no corpus sample is supplied.
DEFAULT_EXEMPLARS: list[tuple[str, str]] = [
    ("Mitologia", "La conosce chi conosce i miti"),
    ("Curiosità", "Il desiderio di sapere"),
    ("Soia", "Un legume esotico"),
    ("Assiomi", "Un insieme di verità accettate come base dei ragionamenti logici"),
    ("Galileo", "Egli introdusse il metodo sperimentale nella scienza moderna"),
    ("Conoscenze", "Informazioni acquisite tramite ricerca organizzata"),
    ("Ipotesi", "Assunte per comprendere le osservazioni sperimentali"),
    ("Rigorosi", "Esatti e precisi nello svolgimento delle azioni"),
]

DEFAULT_EXEMPLAR_COUNT = 8


@dataclass(frozen=True)
class JudgeBackend:
    judge_id: str
    kind: Literal["zero_shot_guideline", "external_model"]
    params: CompletionParams = field(default_factory=CompletionParams)


ZERO_SHOT_GUIDELINE = JudgeBackend("zero_shot_guideline", "zero_shot_guideline")


def _format_exemplars(exemplars: list[tuple[str, str]]) -> str:
    return "\n".join(f"    {answer}: {clue}" for answer, clue in exemplars)


def sample_exemplars(
    corpus: list[ClueAnswerPair] | None,
    k: int = DEFAULT_EXEMPLAR_COUNT,
    seed: int = 0,
) -> list[tuple[str, str]]:
    """Pick k few-shot exemplars, seeded, from a corpus sample (or defaults)."""
    if not corpus:
        return DEFAULT_EXEMPLARS[:k]
    pool = [(p.answer_display, p.clue) for p in corpus]
    rng = random.Random(seed)
    if len(pool) <= k:
        return pool
    return rng.sample(pool, k)


def generate_clues_for_keyword(
    keyword: str,
    n: int,
    gateway: Gateway,
    lang: Language = "it",
    exemplars: list[tuple[str, str]] | None = None,
    params: CompletionParams | None = None,
) -> list[ClueAnswerPair]:
    """Generate up to n distinct candidate clues for one keyword.

    Self-containing and duplicate clues are dropped; the remainder carry
    source=path_b.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    answer_grid = normalize_answer(keyword)
    if exemplars is None:
        exemplars = DEFAULT_EXEMPLARS
    exchange = gateway.complete(
        "pathb_gen",
        {
            "n": str(n),
            "examples": _format_exemplars(exemplars),
            "keyword": keyword,
        },
        params,
    )
    pairs: list[ClueAnswerPair] = []
    seen: set[str] = set()
    for line in exchange.response_text.splitlines():
        line = line.strip()
        if not line:
            continue
        # Accept both "keyword: clue" lines and bare clue lines.
        head, sep, tail = line.partition(":")
        clue = tail.strip() if sep and normalize_answer_safe(head) == answer_grid else line
        key = clue.lower()
        if not clue or key in seen:
            continue
        seen.add(key)
        if clue_contains_answer(clue, answer_grid):
            continue
        pairs.append(make_pair(clue, keyword, "path_b", lang))
        if len(pairs) >= n:
            break
    return pairs


def normalize_answer_safe(text: str) -> str | None:
    try:
        return normalize_answer(text)
    except Exception:
        return None


def judge_pair(
    pair: ClueAnswerPair, backend: JudgeBackend, gateway: Gateway
) -> QualityVerdict:
    """Label one clue-answer pair acceptable or not.

    Degenerate pairs (empty clue, clue containing its own answer) are
    rejected without a backend call.
    """
    if not pair.clue.strip():
        return QualityVerdict(False, backend.judge_id, "empty clue")
    if clue_contains_answer(pair.clue, pair.answer_grid):
        return QualityVerdict(False, backend.judge_id, "clue contains its answer")
    exchange = gateway.complete(
        "pathb_judge",
        {"answer": pair.answer_display, "clue": pair.clue},
        backend.params if backend.kind == "external_model" else None,
    )
    match = re.search(r"\b(ACCEPT|REJECT)\b", exchange.response_text)
    if match is None:
        raise ParseFailure(
            "judge response has no ACCEPT/REJECT token", exchange.response_text
        )
    rationale = exchange.response_text[match.end():].strip().splitlines()
    return QualityVerdict(
        match.group(1) == "ACCEPT",
        backend.judge_id,
        rationale[0] if rationale else None,
    )


def evaluate_judge(
    backend: JudgeBackend, labeled_pairs: list[ClueAnswerPair], gateway: Gateway
) -> EvalMetrics:
    """Score a judge backend against human labels (True = acceptable)."""
    if any(p.label == "unlabeled" for p in labeled_pairs):
        raise ValueError("every pair must carry a label")
    predictions = [
        judge_pair(p, backend, gateway).accepted for p in labeled_pairs
    ]
    labels = [p.label == "acceptable" for p in labeled_pairs]
    return compute_metrics(predictions, labels)
