"""Corpus ingestion, deduplication, length statistics, splitting, and export.

File format is tab-separated ``clue<TAB>answer<TAB>source`` with a header
row; rows containing stray tabs are routed to the rejects list, never
silently dropped.
"""

from __future__ import annotations

import csv
import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

from .core import (
    ClueAnswerPair,
    CruxError,
    EmptyAnswer,
    Language,
    UnmappableCharacter,
    make_pair,
)

HEADER = ("clue", "answer", "source")


class FileNotFound(CruxError):
    pass


class MalformedHeader(CruxError):
    pass


class TooFewRecords(CruxError):
    pass


@dataclass(frozen=True)
class CorpusRecord:
    pair: ClueAnswerPair
    source_file: str
    line_no: int


@dataclass(frozen=True)
class Reject:
    line_no: int
    reason: str
    raw: str


@dataclass(frozen=True)
class LengthHistogram:
    by_length: dict[int, tuple[int, int]]  # length -> (unique_pairs, unique_answers)

    def to_json(self) -> str:
        payload = {
            "by_length": {
                str(n): {"pairs": p, "answers": a}
                for n, (p, a) in sorted(self.by_length.items())
            }
        }
        return json.dumps(payload, indent=2)


def ingest(
    path: str | Path,
    format: str = "tsv",
    default_language: Language = "it",
) -> tuple[list[CorpusRecord], list[Reject]]:
    """Read a clue-answer file; bad rows go to the rejects list.

    Never aborts on a malformed row; every reject carries its line number
    and a reason code.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFound(str(path))
    delimiter = "\t" if format == "tsv" else ","
    records: list[CorpusRecord] = []
    rejects: list[Reject] = []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedHeader(f"{path} is empty")
        if [h.strip().lower() for h in header[:2]] != ["clue", "answer"]:
            raise MalformedHeader(f"unexpected header {header!r}")
        for line_no, row in enumerate(reader, start=2):
            raw = delimiter.join(row)
            if len(row) < 2 or len(row) > 3:
                rejects.append(Reject(line_no, "BadColumnCount", raw))
                continue
            clue = row[0].strip()
            answer = row[1].strip()
            source = row[2].strip() if len(row) == 3 and row[2].strip() else "corpus"
            if source not in ("corpus", "path_a", "path_b", "manual"):
                rejects.append(Reject(line_no, "UnknownSource", raw))
                continue
            if not clue:
                rejects.append(Reject(line_no, "EmptyClue", raw))
                continue
            try:
                pair = make_pair(clue, answer, source, default_language)
            except EmptyAnswer:
                rejects.append(Reject(line_no, "EmptyAnswer", raw))
                continue
            except UnmappableCharacter as exc:
                rejects.append(
                    Reject(line_no, f"UnmappableCharacter:{exc.char}", raw)
                )
                continue
            records.append(CorpusRecord(pair, str(path), line_no))
    return records, rejects


def _dedup_key(pair: ClueAnswerPair) -> tuple[str, str]:
    # Case/whitespace-insensitive clue plus grid answer: merges scraper
    # artifacts without merging genuinely different clues.
    return (" ".join(pair.clue.lower().split()), pair.answer_grid)


def dedup(records: list[CorpusRecord]) -> list[CorpusRecord]:
    """Drop later records with a duplicate (clue, answer) key; order preserved."""
    seen: set[tuple[str, str]] = set()
    out = []
    for rec in records:
        key = _dedup_key(rec.pair)
        if key in seen:
            continue
        seen.add(key)
        out.append(rec)
    return out


def length_histogram(records: list[CorpusRecord]) -> LengthHistogram:
    """Per-answer-length counts of unique pairs and unique answers."""
    pairs: dict[int, int] = {}
    answers: dict[int, set[str]] = {}
    for rec in records:
        n = len(rec.pair.answer_grid)
        pairs[n] = pairs.get(n, 0) + 1
        answers.setdefault(n, set()).add(rec.pair.answer_grid)
    return LengthHistogram(
        {n: (pairs[n], len(answers[n])) for n in pairs}
    )


def split(
    records: list[CorpusRecord], train_fraction: float, seed: int
) -> tuple[list[CorpusRecord], list[CorpusRecord]]:
    """Seed-deterministic train/test partition; |train| = round(fraction*N)."""
    if not 0 < train_fraction < 1:
        raise ValueError(f"train_fraction {train_fraction} not in (0, 1)")
    if len(records) < 2:
        raise TooFewRecords(f"{len(records)} records")
    n_train = int(math.floor(train_fraction * len(records) + 0.5))
    indices = list(range(len(records)))
    random.Random(seed).shuffle(indices)
    train_idx = set(indices[:n_train])
    train = [r for i, r in enumerate(records) if i in train_idx]
    test = [r for i, r in enumerate(records) if i not in train_idx]
    return train, test


def export_tsv(records: list[CorpusRecord], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
        writer.writerow(HEADER)
        for rec in records:
            writer.writerow(
                [rec.pair.clue, rec.pair.answer_display, rec.pair.source]
            )


def write_rejects(rejects: list[Reject], source_path: str | Path) -> Path:
    """Write the rejects sidecar file next to the ingested file."""
    out = Path(str(source_path) + ".rejects")
    with out.open("w", encoding="utf-8") as fh:
        for rej in rejects:
            fh.write(f"{rej.line_no}\t{rej.reason}\t{rej.raw}\n")
    return out
