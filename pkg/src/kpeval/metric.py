"""Keyphrase-overlap scoring of peer summaries against references.

A peer and each reference summary are reduced to sets of lemma-sequence
keyphrases; the number of shared phrases, accumulated over references,
yields recall, precision, and their harmonic mean.
"""

import logging
from dataclasses import dataclass

from .extract import ExtractorConfig, extract_keyphrases
from .morph import Lexicon

logger = logging.getLogger(__name__)

LemmaSeq = tuple[str, ...]


@dataclass(frozen=True)
class ScoreTriple:
    precision: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class MatchStatistics:
    """Raw counts behind a score.

    ``match_total`` sums, over references, the number of peer keyphrases
    found in that reference; ``ref_total`` sums the reference keyphrase
    counts; ``sys_total`` is the peer keyphrase count.
    """

    match_total: int
    ref_total: int
    sys_total: int
    num_references: int

    def __post_init__(self) -> None:
        for name in ("match_total", "ref_total", "sys_total", "num_references"):
            value = getattr(self, name)
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        ceiling = min(self.ref_total, self.sys_total * self.num_references)
        if self.match_total > ceiling:
            raise ValueError(
                f"match_total {self.match_total} exceeds its ceiling {ceiling}"
            )


def harmonic_f(precision: float, recall: float) -> float:
    """Balanced F-measure; zero when both inputs are zero."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def score_summary(stats: MatchStatistics) -> ScoreTriple:
    """Recall, precision, and F from raw match counts.

    Recall divides matches by the pooled reference phrase count; precision
    divides by the peer phrase count times the number of references, so
    both range over [0, 1] under set-based matching. A zero denominator
    yields a zero score with a warning rather than an error.
    """
    if stats.ref_total > 0:
        recall = stats.match_total / stats.ref_total
    else:
        logger.warning("no reference keyphrases; recall set to 0")
        recall = 0.0
    sys_denominator = stats.sys_total * stats.num_references
    if sys_denominator > 0:
        precision = stats.match_total / sys_denominator
    else:
        logger.warning("no peer keyphrases; precision set to 0")
        precision = 0.0
    return ScoreTriple(precision, recall, harmonic_f(precision, recall))


def match_counts(peer: set[LemmaSeq], refs: list[set[LemmaSeq]]) -> MatchStatistics:
    """Set-level overlap between a peer's phrases and each reference's."""
    if not refs:
        raise ValueError("at least one reference keyphrase set is required")
    match_total = 0
    ref_total = 0
    for ref in refs:
        match_total += len(peer & ref)
        ref_total += len(ref)
    return MatchStatistics(
        match_total=match_total,
        ref_total=ref_total,
        sys_total=len(peer),
        num_references=len(refs),
    )


def keyphrase_set(
    text: str, lex: Lexicon, cfg: ExtractorConfig | None = None
) -> set[LemmaSeq]:
    """Deduplicated lemma sequences of a document's keyphrases."""
    return {kp.lemma_seq for kp in extract_keyphrases(text, lex, cfg)}


def evaluate_peer(
    peer_text: str,
    ref_texts: list[str],
    lex: Lexicon,
    cfg: ExtractorConfig | None = None,
) -> ScoreTriple:
    """End-to-end score of one peer summary against its references."""
    if not ref_texts:
        raise ValueError("at least one reference summary is required")
    peer = keyphrase_set(peer_text, lex, cfg)
    refs = [keyphrase_set(ref, lex, cfg) for ref in ref_texts]
    return score_summary(match_counts(peer, refs))


def average_triples(triples: list[ScoreTriple]) -> ScoreTriple:
    """Unweighted arithmetic mean of each component."""
    if not triples:
        raise ValueError("cannot average an empty list of scores")
    n = len(triples)
    return ScoreTriple(
        precision=sum(t.precision for t in triples) / n,
        recall=sum(t.recall for t in triples) / n,
        f_measure=sum(t.f_measure for t in triples) / n,
    )


def evaluate_system(
    system_id: str,
    topic_map: dict[str, tuple[str | None, list[str]]],
    lex: Lexicon,
    cfg: ExtractorConfig | None = None,
    missing_policy: str = "zero",
) -> ScoreTriple:
    """Mean score of one system over its topics.

    ``topic_map`` maps a topic id to (peer text, reference texts); a peer
    of ``None`` marks a topic the system did not cover, which scores zero
    under the default policy or is dropped under ``missing_policy="skip"``.
    """
    if not topic_map:
        raise ValueError(f"system {system_id} has no topics")
    if missing_policy not in ("zero", "skip"):
        raise ValueError(f"unknown missing-peer policy {missing_policy!r}")
    triples: list[ScoreTriple] = []
    for topic in sorted(topic_map):
        peer_text, ref_texts = topic_map[topic]
        if peer_text is None:
            if missing_policy == "zero":
                logger.warning(
                    "system %s has no summary for topic %s; scoring 0", system_id, topic
                )
                triples.append(ScoreTriple(0.0, 0.0, 0.0))
            else:
                logger.warning(
                    "system %s has no summary for topic %s; skipping", system_id, topic
                )
            continue
        triples.append(evaluate_peer(peer_text, ref_texts, lex, cfg))
    if not triples:
        raise ValueError(f"system {system_id} has no scored topics")
    return average_triples(triples)
