"""Umbrella command line: corpus tools, clue pipelines, grid generation,
judge evaluation, and the HTTP service."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import dataset
from .core import make_pair
from .generator import GenerationConfig, NoSolution, generate
from .llm.gateway import Gateway, LiveProvider, ReplayProvider
from .pipeline_keyword import ZERO_SHOT_GUIDELINE, JudgeBackend, evaluate_judge, generate_clues_for_keyword
from .pipeline_text import run_path_a
from .puzzle import assign_numbering, export_puzzle


def _make_gateway(fixture: str | None, cache_dir: str | None) -> Gateway:
    if fixture:
        provider = ReplayProvider(fixture)
    else:
        provider = LiveProvider.from_env()
    return Gateway(provider, cache_dir=Path(cache_dir) if cache_dir else None)


def _write_pairs_tsv(pairs, path: Path) -> None:
    with path.open("w", encoding="utf-8") as fh:
        fh.write("clue\tanswer\tsource\n")
        for p in pairs:
            fh.write(f"{p.clue}\t{p.answer_display}\t{p.source}\n")


@click.group()
def main():
    """Educational crossword toolkit."""


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["tsv", "csv"]), default="tsv")
@click.option("--out", required=True, type=click.Path())
def ingest(input_path, fmt, out):
    """Ingest, clean, and deduplicate a clue-answer file."""
    records, rejects = dataset.ingest(input_path, fmt)
    records = dataset.dedup(records)
    dataset.export_tsv(records, out)
    if rejects:
        sidecar = dataset.write_rejects(rejects, input_path)
        click.echo(f"{len(rejects)} rejected rows -> {sidecar}", err=True)
    click.echo(f"{len(records)} records -> {out}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path())
def stats(input_path, out):
    """Answer-length histogram as a JSON report."""
    records, _ = dataset.ingest(input_path)
    records = dataset.dedup(records)
    hist = dataset.length_histogram(records)
    Path(out).write_text(hist.to_json(), encoding="utf-8")
    click.echo(f"histogram over {len(records)} records -> {out}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--train-fraction", default=0.8, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--train-out", required=True, type=click.Path())
@click.option("--test-out", required=True, type=click.Path())
def split(input_path, train_fraction, seed, train_out, test_out):
    """Seed-deterministic train/test split."""
    records, _ = dataset.ingest(input_path)
    records = dataset.dedup(records)
    train, test = dataset.split(records, train_fraction, seed)
    dataset.export_tsv(train, train_out)
    dataset.export_tsv(test, test_out)
    click.echo(f"split {len(records)} -> {len(train)} train / {len(test)} test")


@main.command("gen-from-text")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--lang", type=click.Choice(["it", "en"]), default="en")
@click.option("--out", required=True, type=click.Path())
@click.option("--report", "report_path", required=True, type=click.Path())
@click.option("--fixture", type=click.Path(exists=True), help="Replay fixture instead of a live provider.")
@click.option("--cache-dir", type=click.Path())
def gen_from_text(input_path, lang, out, report_path, fixture, cache_dir):
    """Generate validated clue-answer pairs from a text document."""
    document = Path(input_path).read_text(encoding="utf-8")
    gateway = _make_gateway(fixture, cache_dir)
    pairs, report = run_path_a(document, lang, gateway)
    _write_pairs_tsv(pairs, Path(out))
    Path(report_path).write_text(
        json.dumps(report.to_dict(), indent=2), encoding="utf-8"
    )
    click.echo(f"{len(pairs)} pairs -> {out}")


@main.command("gen-from-keywords")
@click.option("--keywords", "keywords_path", required=True, type=click.Path(exists=True))
@click.option("--n", default=3, show_default=True)
@click.option("--lang", type=click.Choice(["it", "en"]), default="it")
@click.option("--out", required=True, type=click.Path())
@click.option("--fixture", type=click.Path(exists=True))
@click.option("--cache-dir", type=click.Path())
def gen_from_keywords(keywords_path, n, lang, out, fixture, cache_dir):
    """Generate candidate clues from a keyword list (one per line)."""
    keywords = [
        line.strip()
        for line in Path(keywords_path).read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    gateway = _make_gateway(fixture, cache_dir)
    pairs = []
    for keyword in keywords:
        pairs.extend(generate_clues_for_keyword(keyword, n, gateway, lang))
    _write_pairs_tsv(pairs, Path(out))
    click.echo(f"{len(pairs)} pairs -> {out}")


@main.command("eval-judge")
@click.option("--pairs", "pairs_path", required=True, type=click.Path(exists=True))
@click.option("--judge", default="zero_shot_guideline", show_default=True)
@click.option("--report", "report_path", required=True, type=click.Path())
@click.option("--fixture", type=click.Path(exists=True))
@click.option("--cache-dir", type=click.Path())
def eval_judge(pairs_path, judge, report_path, fixture, cache_dir):
    """Evaluate a judge backend on a labeled TSV (clue, answer, source, label)."""
    labeled = []
    with Path(pairs_path).open(encoding="utf-8") as fh:
        header = fh.readline()
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            if len(parts) < 4:
                continue
            clue, answer, source, label = parts[:4]
            labeled.append(make_pair(clue, answer, source or "corpus", "it", label))
    backend = (
        ZERO_SHOT_GUIDELINE
        if judge == "zero_shot_guideline"
        else JudgeBackend(judge, "external_model")
    )
    gateway = _make_gateway(fixture, cache_dir)
    metrics = evaluate_judge(backend, labeled, gateway)
    Path(report_path).write_text(
        json.dumps(
            {
                "accuracy": metrics.accuracy,
                "precision": metrics.precision,
                "recall": metrics.recall,
                "f1": metrics.f1,
                "counts": {
                    "tp": metrics.tp,
                    "fp": metrics.fp,
                    "tn": metrics.tn,
                    "fn": metrics.fn,
                },
            },
            indent=2,
        ),
        encoding="utf-8",
    )
    click.echo(f"accuracy {metrics.accuracy:.4f} f1 {metrics.f1:.4f} -> {report_path}")


@main.command("gen-schema")
@click.option("--pairs", "pairs_path", required=True, type=click.Path(exists=True))
@click.option("--preferred", "preferred_path", type=click.Path(exists=True))
@click.option("--width", default=15, show_default=True)
@click.option("--height", default=15, show_default=True)
@click.option("--min-words", default=8, show_default=True)
@click.option("--min-fill", default=0.35, show_default=True)
@click.option("--max-restarts", default=50, show_default=True)
@click.option("--max-seconds", default=10.0, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--out", required=True, type=click.Path())
def gen_schema(pairs_path, preferred_path, width, height, min_words, min_fill,
               max_restarts, max_seconds, seed, out):
    """Lay out a crossword grid from curated clue-answer pairs."""
    records, _ = dataset.ingest(pairs_path)
    pool = [r.pair for r in dataset.dedup(records)]
    preferred = set()
    if preferred_path:
        from .core import normalize_answer

        preferred = {
            normalize_answer(line.strip())
            for line in Path(preferred_path).read_text(encoding="utf-8").splitlines()
            if line.strip()
        }
    config = GenerationConfig(
        width=width,
        height=height,
        min_words=min_words,
        min_fill_ratio=min_fill,
        max_restarts=max_restarts,
        max_duration=max_seconds,
        seed=seed,
    )
    try:
        result = generate(pool, preferred, config)
    except NoSolution as exc:
        click.echo(f"no solution: {exc}", err=True)
        sys.exit(1)
    puzzle = assign_numbering(result.grid, pool, result.breakdown)
    Path(out).write_bytes(export_puzzle(puzzle, "json"))
    click.echo(
        f"grid {result.breakdown.fw} words, score {result.breakdown.score:.4f} -> {out}"
    )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--data-dir", type=click.Path())
@click.option("--fixture", type=click.Path(exists=True))
def serve(host, port, data_dir, fixture):
    """Run the HTTP API."""
    import uvicorn

    from .service import create_app

    gateway = _make_gateway(fixture, None) if fixture else None
    uvicorn.run(create_app(gateway=gateway, data_dir=data_dir), host=host, port=port)


if __name__ == "__main__":
    main()
