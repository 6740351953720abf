"""Command-line front-end.

Subcommands:

``extract``
    List the keyphrases of one document, best first.
``evaluate``
    Score every peer summary in a dataset against its topic's model
    summaries, writing per-topic and aggregate CSV tables plus a JSON
    report with input digests.
``correlate``
    Compare metric score tables (CSV) by Pearson and Spearman agreement.
``train``
    Fit scoring weights on documents paired with gold keyphrase files.
"""

import argparse
import csv
import dataclasses
import hashlib
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .config import config_to_dict, load_config, save_config
from .correlation import MetricTable, correlate_metrics
from .dataset import DatasetLayout, load_manifest, read_text, scan_dataset
from .errors import DatasetError, KpevalError
from .extract import ExtractorConfig, extract_keyphrases
from .metric import ScoreTriple, average_triples, evaluate_peer
from .morph import Lexicon, annotate_document, load_lexicon
from .rouge import rouge_n, rouge_su
from .text import normalize, split_sentences, tokenize
from .train import train_weights

logger = logging.getLogger(__name__)

METRICS = ("kpeval", "rouge1", "rouge2", "rougesu4")


def _token_streams(
    text: str, normalization, lex: Lexicon | None, token_form: str
) -> list[list[str]]:
    """Sentence-structured token lists for the overlap baselines.

    ``token_form="lemma"`` runs the analyzer so the baselines match on the
    same units as the keyphrase metric; without a lexicon every lemma
    falls back to the surface form.
    """
    sentences = split_sentences(normalize(text, normalization))
    if token_form == "lemma" and lex is not None:
        return [[tok.lemma for tok in s.tokens] for s in annotate_document(sentences, lex)]
    return [[tok.text for tok in tokenize(s)] for s in sentences]


def _score_pair(
    metric: str,
    peer_text: str,
    model_texts: list[str],
    cfg: ExtractorConfig,
    lex: Lexicon | None,
    token_form: str,
) -> ScoreTriple:
    if metric == "kpeval":
        if lex is None:
            raise ValueError("the kpeval metric requires a lexicon")
        return evaluate_peer(peer_text, model_texts, lex, cfg)
    peer = _token_streams(peer_text, cfg.normalization, lex, token_form)
    refs = [_token_streams(t, cfg.normalization, lex, token_form) for t in model_texts]
    if metric == "rouge1":
        return rouge_n(peer, refs, 1)
    if metric == "rouge2":
        return rouge_n(peer, refs, 2)
    if metric == "rougesu4":
        return rouge_su(peer, refs, max_gap=4, include_unigrams=True)
    raise ValueError(f"unknown metric {metric!r}")


def _score_task(task) -> tuple[str, str, ScoreTriple]:
    """Picklable worker: one (system, topic) evaluation."""
    metric, system, topic, peer_text, model_texts, cfg, lex, token_form = task
    return system, topic, _score_pair(metric, peer_text, model_texts, cfg, lex, token_form)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _input_digests(layout: DatasetLayout, lexicon_path: Path | None) -> dict:
    topics = {}
    for topic in layout.topics:
        topics[topic] = {
            "peers": {
                system: _sha256(path)
                for system, path in sorted(layout.peers[topic].items())
            },
            "models": [
                {"name": path.name, "sha256": _sha256(path)}
                for path in layout.models[topic]
            ],
        }
    return {
        "lexicon_sha256": _sha256(lexicon_path) if lexicon_path else None,
        "topics": topics,
    }


def run_evaluate(
    root: str | None,
    lexicon_path: str | None,
    config_path: str | None,
    metric: str,
    out_path: str,
    manifest_path: str | None = None,
    jobs: int = 1,
    missing_policy: str = "zero",
    token_form: str = "lemma",
) -> dict:
    """Score all (system, topic) pairs and write the report files.

    Returns the report dictionary that was written to ``report.json``.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if missing_policy not in ("zero", "skip"):
        raise ValueError(f"unknown missing-peer policy {missing_policy!r}")
    if token_form not in ("lemma", "surface"):
        raise ValueError(f"unknown token form {token_form!r}")
    layout = load_manifest(manifest_path) if manifest_path else scan_dataset(root)
    cfg = load_config(config_path) if config_path else ExtractorConfig()
    lex = load_lexicon(lexicon_path, cfg.normalization) if lexicon_path else None

    model_texts = {
        topic: [read_text(p) for p in layout.models[topic]] for topic in layout.topics
    }
    scored: dict[tuple[str, str], ScoreTriple] = {}
    tasks = []
    for system in layout.system_ids():
        for topic in layout.topics:
            peer_path = layout.peers[topic].get(system)
            if peer_path is None:
                if missing_policy == "zero":
                    logger.warning(
                        "system %s has no summary for topic %s; scoring 0", system, topic
                    )
                    scored[(system, topic)] = ScoreTriple(0.0, 0.0, 0.0)
                else:
                    logger.warning(
                        "system %s has no summary for topic %s; skipping", system, topic
                    )
                continue
            tasks.append(
                (
                    metric,
                    system,
                    topic,
                    read_text(peer_path),
                    model_texts[topic],
                    cfg,
                    lex,
                    token_form,
                )
            )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_score_task, tasks))
    else:
        results = [_score_task(task) for task in tasks]
    for system, topic, triple in results:
        scored[(system, topic)] = triple

    rows = [(system, topic, scored[(system, topic)]) for system, topic in sorted(scored)]
    aggregates: dict[str, ScoreTriple] = {}
    for system in layout.system_ids():
        triples = [t for s, _, t in rows if s == system]
        if triples:
            aggregates[system] = average_triples(triples)

    out_dir = Path(out_path)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_scores_csv(out_dir / "scores.csv", rows)
    _write_aggregate_csv(out_dir / "aggregate.csv", aggregates)
    report = {
        "version": __version__,
        "metric": metric,
        "token_form": token_form,
        "missing_policy": missing_policy,
        "config": config_to_dict(cfg),
        "inputs": _input_digests(layout, Path(lexicon_path) if lexicon_path else None),
        "scores": {
            system: {topic: _triple_dict(t) for s, topic, t in rows if s == system}
            for system in sorted({s for s, _, _ in rows})
        },
        "aggregates": {
            system: {
                "avg_precision": t.precision,
                "avg_recall": t.recall,
                "avg_f": t.f_measure,
            }
            for system, t in sorted(aggregates.items())
        },
    }
    _write_json(out_dir / "report.json", report)
    return report


def _triple_dict(t: ScoreTriple) -> dict:
    return {"precision": t.precision, "recall": t.recall, "f": t.f_measure}


def _write_scores_csv(path: Path, rows) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["system_id", "topic_id", "precision", "recall", "f"])
        for system, topic, t in rows:
            writer.writerow(
                [system, topic, f"{t.precision:.6f}", f"{t.recall:.6f}", f"{t.f_measure:.6f}"]
            )


def _write_aggregate_csv(path: Path, aggregates: dict[str, ScoreTriple]) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["system_id", "avg_precision", "avg_recall", "avg_f"])
        for system, t in sorted(aggregates.items()):
            writer.writerow(
                [system, f"{t.precision:.6f}", f"{t.recall:.6f}", f"{t.f_measure:.6f}"]
            )


def _write_json(path: Path, data: dict) -> None:
    with path.open("w", encoding="utf-8") as fh:
        json.dump(data, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")


def run_extract(file: str, lexicon_path: str, config_path: str | None) -> None:
    cfg = load_config(config_path) if config_path else ExtractorConfig()
    lex = load_lexicon(lexicon_path, cfg.normalization)
    for kp in extract_keyphrases(read_text(Path(file)), lex, cfg):
        print(f"{kp.score:.5f}\t{' '.join(kp.lemma_seq)}\t{kp.surface_example}")


def _read_metric_csv(path: Path) -> dict[str, float]:
    """System scores from a metric CSV.

    Accepts the aggregate table (``avg_f`` column), the per-topic table
    (``f`` averaged per system), or a plain two-column
    ``system_id,score`` table for externally produced scores.
    """
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path} is empty") from None
        body = [row for row in reader if row]
    if header == ["system_id", "topic_id", "precision", "recall", "f"]:
        totals: dict[str, list[float]] = {}
        for row in body:
            totals.setdefault(row[0], []).append(float(row[4]))
        return {system: sum(vals) / len(vals) for system, vals in totals.items()}
    if header == ["system_id", "avg_precision", "avg_recall", "avg_f"]:
        return {row[0]: float(row[3]) for row in body}
    if len(header) == 2 and header[0] == "system_id":
        return {row[0]: float(row[1]) for row in body}
    raise ValueError(f"unrecognized CSV header in {path}: {header}")


def run_correlate(
    csv_paths: list[str], anchor_name: str | None, out_path: str | None
) -> dict:
    """Correlate one anchor metric against every other metric table."""
    if len(csv_paths) < 2:
        raise ValueError("correlate needs at least two metric CSVs")
    columns: dict[str, dict[str, float]] = {}
    for raw in csv_paths:
        path = Path(raw)
        if path.stem in columns:
            raise ValueError(f"duplicate metric name {path.stem!r}")
        columns[path.stem] = _read_metric_csv(path)
    names = [Path(raw).stem for raw in csv_paths]
    base = set(columns[names[0]])
    for name in names[1:]:
        if set(columns[name]) != base:
            only_first = sorted(base - set(columns[name]))
            only_other = sorted(set(columns[name]) - base)
            raise ValueError(
                f"system sets differ: only in {names[0]}: {only_first}; "
                f"only in {name}: {only_other}"
            )
    systems = tuple(sorted(base))
    table = MetricTable(
        systems=systems,
        scores={
            name: tuple(columns[name][s] for s in systems) for name in names
        },
    )
    anchor = anchor_name if anchor_name is not None else names[0]
    result = correlate_metrics(table, anchor)
    report = {
        "anchor": anchor,
        "num_systems": len(systems),
        "pairs": [
            {"metric": pair[1], "pearson": stats["pearson"], "spearman": stats["spearman"]}
            for pair, stats in sorted(result.pairs.items())
        ],
        "rankings": {name: list(r) for name, r in result.rankings.items()},
    }
    if out_path:
        _write_json(Path(out_path), report)
    else:
        print(json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True))
    return report


def run_train(
    corpus_dir: str,
    lexicon_path: str,
    config_path: str | None,
    out_path: str,
    epochs: int,
    learning_rate: float,
) -> None:
    """Fit weights on ``<name>.txt`` documents with ``<name>.kp`` gold files.

    Each gold file lists one keyphrase per line as space-separated lemma
    tokens. The trained weights are saved as a full config file.
    """
    corpus = Path(corpus_dir)
    cfg = load_config(config_path) if config_path else ExtractorConfig()
    lex = load_lexicon(lexicon_path, cfg.normalization)
    labeled = []
    for doc_path in sorted(corpus.glob("*.txt")):
        gold_path = doc_path.with_suffix(".kp")
        if not gold_path.is_file():
            raise DatasetError(
                f"no gold keyphrase file for {doc_path} (expected {gold_path})"
            )
        doc = annotate_document(
            split_sentences(normalize(read_text(doc_path), cfg.normalization)), lex
        )
        gold = set()
        for line in read_text(gold_path).splitlines():
            line = line.strip()
            if line:
                gold.add(tuple(normalize(w, cfg.normalization) for w in line.split()))
        labeled.append((doc, gold))
    if not labeled:
        raise DatasetError(f"no training documents (*.txt) under {corpus}")
    weights, losses = train_weights(labeled, epochs=epochs, learning_rate=learning_rate)
    save_config(dataclasses.replace(cfg, weights=weights), out_path)
    if losses:
        print(f"final_loss\t{losses[-1]:.6f}")
    for name, value in zip(weights.field_names(), weights.as_tuple()):
        print(f"{name}\t{value:.6f}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpeval",
        description="Keyphrase-overlap summary evaluation with overlap baselines.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="list the keyphrases of one document")
    p_extract.add_argument("file", help="UTF-8 text file")
    p_extract.add_argument("--lexicon", required=True, help="lexicon TSV path")
    p_extract.add_argument("--config", help="extractor config JSON")

    p_eval = sub.add_parser(
        "evaluate", help="score every peer summary against its topic's models"
    )
    p_eval.add_argument(
        "root", nargs="?", help="dataset root (<topic>/peers, <topic>/models)"
    )
    p_eval.add_argument("--manifest", help="JSON manifest instead of a dataset root")
    p_eval.add_argument("--lexicon", help="lexicon TSV (required for --metric kpeval)")
    p_eval.add_argument("--config", help="extractor config JSON")
    p_eval.add_argument("--metric", choices=METRICS, default="kpeval")
    p_eval.add_argument("--out", required=True, help="output directory")
    p_eval.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_eval.add_argument(
        "--missing",
        choices=("zero", "skip"),
        default="zero",
        help="policy for systems with no summary in a topic",
    )
    p_eval.add_argument(
        "--token-form",
        choices=("lemma", "surface"),
        default="lemma",
        help="token unit for the overlap baselines",
    )

    p_corr = sub.add_parser("correlate", help="compare metric score tables")
    p_corr.add_argument("csvs", nargs="+", help="metric CSV files (>= 2)")
    p_corr.add_argument("--anchor", help="anchor metric name (default: first CSV)")
    p_corr.add_argument("--out", help="write the JSON report here instead of stdout")

    p_train = sub.add_parser("train", help="fit scoring weights on labeled documents")
    p_train.add_argument("corpus", help="directory of <name>.txt plus <name>.kp files")
    p_train.add_argument("--lexicon", required=True, help="lexicon TSV path")
    p_train.add_argument("--config", help="base extractor config JSON")
    p_train.add_argument("--out", required=True, help="output config JSON path")
    p_train.add_argument("--epochs", type=int, default=200)
    p_train.add_argument("--learning-rate", type=float, default=0.1)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "extract":
            run_extract(args.file, args.lexicon, args.config)
        elif args.command == "evaluate":
            if (args.root is None) == (args.manifest is None):
                raise ValueError("provide a dataset root or --manifest, not both")
            if args.metric == "kpeval" and not args.lexicon:
                raise ValueError("--lexicon is required for the kpeval metric")
            run_evaluate(
                args.root,
                args.lexicon,
                args.config,
                args.metric,
                args.out,
                manifest_path=args.manifest,
                jobs=args.jobs,
                missing_policy=args.missing,
                token_form=args.token_form,
            )
        elif args.command == "correlate":
            run_correlate(args.csvs, args.anchor, args.out)
        elif args.command == "train":
            run_train(
                args.corpus,
                args.lexicon,
                args.config,
                args.out,
                args.epochs,
                args.learning_rate,
            )
        return 0
    except (KpevalError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
