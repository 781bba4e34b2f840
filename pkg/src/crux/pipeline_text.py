"""Text-to-clues pipeline: paragraph splitting, keyword extraction, clue
generation, and multi-stage validation (length filter + truth check)."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import (
    ClueAnswerPair,
    CruxError,
    EmptyAnswer,
    Language,
    UnmappableCharacter,
    clue_contains_answer,
    fold_clue,
    make_pair,
)
from .llm.gateway import Gateway

MAX_KEYWORD_TOKENS = 3
DEFAULT_MIN_PARAGRAPH_LEN = 200

KEYWORD_LINE = {"it": "Parole chiave:", "en": "Keywords:"}


class EmptyDocument(CruxError):
    pass


class ParseFailure(CruxError):
    def __init__(self, message: str, response: str):
        self.response = response
        super().__init__(message)


class StageError(CruxError):
    """Wraps a stage failure with the stage name and paragraph index."""

    def __init__(self, stage: str, paragraph_index: int, cause: Exception):
        self.stage = stage
        self.paragraph_index = paragraph_index
        self.cause = cause
        super().__init__(f"{stage} failed on paragraph {paragraph_index}: {cause}")


@dataclass(frozen=True)
class Paragraph:
    text: str
    index: int
    source_id: str = ""


@dataclass
class PipelineRunReport:
    keywords_extracted: int = 0
    keywords_kept: int = 0
    clues_generated: int = 0
    clues_kept: int = 0
    exchange_digests: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "keywords_extracted": self.keywords_extracted,
            "keywords_kept": self.keywords_kept,
            "clues_generated": self.clues_generated,
            "clues_kept": self.clues_kept,
            "exchange_digests": list(self.exchange_digests),
        }


@dataclass(frozen=True)
class PathAConfig:
    min_paragraph_len: int = DEFAULT_MIN_PARAGRAPH_LEN
    source_id: str = "document"


def split_paragraphs(document: str, min_len: int = DEFAULT_MIN_PARAGRAPH_LEN,
                     source_id: str = "document") -> list[Paragraph]:
    """Split on blank lines, merging fragments shorter than min_len into the
    following fragment (or the previous one at end of document)."""
    fragments = [f.strip() for f in re.split(r"\n\s*\n", document) if f.strip()]
    merged: list[str] = []
    carry = ""
    for frag in fragments:
        if carry:
            frag = carry + "\n" + frag
            carry = ""
        if len(frag) < min_len:
            carry = frag
        else:
            merged.append(frag)
    if carry:
        if merged:
            merged[-1] = merged[-1] + "\n" + carry
        elif len(carry) >= min_len:
            merged.append(carry)
    if not merged:
        raise EmptyDocument("no paragraph meets the minimum length")
    return [Paragraph(text, i, source_id) for i, text in enumerate(merged)]


def extract_keywords(p: Paragraph, lang: Language, gateway: Gateway) -> tuple[list[str], str]:
    """Run the keyword template and parse the final keyword line.

    Returns the keyword list and the exchange digest.
    """
    exchange = gateway.complete(f"kw_{lang}", {"text": p.text})
    anchor_variants = (KEYWORD_LINE["it"], KEYWORD_LINE["en"])
    keyword_line = None
    for line in exchange.response_text.splitlines():
        stripped = line.strip()
        for anchor in anchor_variants:
            if stripped.lower().startswith(anchor.lower()):
                keyword_line = stripped[len(anchor):]
    if keyword_line is None:
        raise ParseFailure("no keyword line found", exchange.response_text)
    keywords = []
    seen = set()
    for kw in keyword_line.split(","):
        kw = kw.strip()
        if not kw:
            continue
        key = kw.lower()
        if key in seen:
            continue
        seen.add(key)
        keywords.append(kw)
    return keywords, exchange.digest


def filter_keywords(keywords: list[str]) -> list[str]:
    """Keep keywords of at most three whitespace-separated tokens."""
    return [kw for kw in keywords if len(kw.split()) <= MAX_KEYWORD_TOKENS]


def _parse_clue_lines(response: str, keywords: list[str]) -> list[tuple[str, str]]:
    """Match "Keyword: clue" lines against the keyword list, case/accent
    insensitively. Returns (keyword-as-given, clue) in keyword order."""
    by_fold = {fold_clue(kw): kw for kw in keywords}
    found: dict[str, str] = {}
    for line in response.splitlines():
        if ":" not in line:
            continue
        head, _, tail = line.partition(":")
        head_key = fold_clue(head.strip())
        clue = tail.strip()
        if head_key in by_fold and clue and head_key not in found:
            found[head_key] = clue
    return [(by_fold[k], found[k]) for k in (fold_clue(kw) for kw in keywords) if k in found]


def generate_clues(
    p: Paragraph, keywords: list[str], lang: Language, gateway: Gateway
) -> tuple[list[ClueAnswerPair], str]:
    """Run the clue template over the paragraph's keywords.

    Clues containing their own keyword are dropped; so are keywords that do
    not normalize to the grid alphabet.
    """
    if not keywords:
        raise ValueError("keywords must be non-empty")
    exchange = gateway.complete(
        f"clue_{lang}", {"keywords": ", ".join(keywords), "text": p.text}
    )
    parsed = _parse_clue_lines(exchange.response_text, keywords)
    if not parsed:
        raise ParseFailure("no clue lines parsed", exchange.response_text)
    pairs = []
    for keyword, clue in parsed:
        try:
            pair = make_pair(clue, keyword, "path_a", lang)
        except (EmptyAnswer, UnmappableCharacter):
            continue
        if clue_contains_answer(clue, pair.answer_grid):
            continue
        pairs.append(pair)
    return pairs, exchange.digest


def truth_check(
    pairs: list[ClueAnswerPair], p: Paragraph, lang: Language, gateway: Gateway
) -> tuple[list[ClueAnswerPair], list[bool], str]:
    """Filter clues through the True/False presence check.

    One verdict token is expected per submitted clue, positionally; on a
    count mismatch the whole batch fails closed (nothing kept).
    """
    if not pairs:
        raise ValueError("pairs must be non-empty")
    clues_block = "\n".join(pair.clue for pair in pairs)
    exchange = gateway.complete(
        f"check_{lang}", {"clue": clues_block, "text": p.text}
    )
    tokens = re.findall(r"\b(True|False)\b", exchange.response_text)
    if len(tokens) != len(pairs):
        raise ParseFailure(
            f"expected {len(pairs)} True/False tokens, got {len(tokens)}",
            exchange.response_text,
        )
    verdicts = [tok == "True" for tok in tokens]
    kept = [pair for pair, ok in zip(pairs, verdicts) if ok]
    return kept, verdicts, exchange.digest


def run_path_a(
    document: str,
    lang: Language,
    gateway: Gateway,
    config: PathAConfig = PathAConfig(),
) -> tuple[list[ClueAnswerPair], PipelineRunReport]:
    """Full text-to-pairs pipeline; paragraph results merged in index order."""
    paragraphs = split_paragraphs(document, config.min_paragraph_len, config.source_id)
    report = PipelineRunReport()
    all_pairs: list[ClueAnswerPair] = []
    for p in paragraphs:
        try:
            keywords, digest = extract_keywords(p, lang, gateway)
            report.exchange_digests.append(digest)
            report.keywords_extracted += len(keywords)
            keywords = filter_keywords(keywords)
            report.keywords_kept += len(keywords)
            if not keywords:
                continue
        except ParseFailure as exc:
            raise StageError("extract_keywords", p.index, exc) from exc
        try:
            pairs, digest = generate_clues(p, keywords, lang, gateway)
            report.exchange_digests.append(digest)
            report.clues_generated += len(pairs)
            if not pairs:
                continue
        except ParseFailure as exc:
            raise StageError("generate_clues", p.index, exc) from exc
        try:
            kept, _verdicts, digest = truth_check(pairs, p, lang, gateway)
            report.exchange_digests.append(digest)
            report.clues_kept += len(kept)
        except ParseFailure as exc:
            raise StageError("truth_check", p.index, exc) from exc
        all_pairs.extend(kept)
    return all_pairs, report
