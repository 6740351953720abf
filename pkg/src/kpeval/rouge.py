"""N-gram and skip-bigram overlap baselines.

Both scorers take summaries as lists of token lists, one per sentence;
units never cross a sentence boundary. Counting is multiset-based with
clipping, and multiple references pool their match and total counts the
same way the keyphrase metric does.
"""

from collections import Counter

from .metric import ScoreTriple, harmonic_f

Sentences = list[list[str]]


def ngram_counts(sentences: Sentences, n: int) -> Counter:
    """Multiset of n-grams per sentence, keyed by token tuple."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    counts: Counter = Counter()
    for tokens in sentences:
        for i in range(len(tokens) - n + 1):
            counts[tuple(tokens[i : i + n])] += 1
    return counts


def skip_bigram_counts(
    sentences: Sentences, max_gap: int, include_unigrams: bool
) -> Counter:
    """Multiset of within-sentence skip-bigrams with at most ``max_gap``
    intervening tokens, optionally pooled with unigrams.

    Unigrams are keyed as 1-tuples and bigrams as 2-tuples, so the two
    unit kinds never collide in the shared counter.
    """
    if max_gap < 0:
        raise ValueError(f"max_gap must be >= 0, got {max_gap}")
    counts: Counter = Counter()
    for tokens in sentences:
        if include_unigrams:
            for token in tokens:
                counts[(token,)] += 1
        for i in range(len(tokens)):
            for j in range(i + 1, min(len(tokens), i + max_gap + 2)):
                counts[(tokens[i], tokens[j])] += 1
    return counts


def _overlap_score(
    peer_counts: Counter, reference_counts_list: list[Counter]
) -> ScoreTriple:
    """Clipped-count recall/precision/F pooled over references."""
    match_total = 0
    reference_total = 0
    for ref_counts in reference_counts_list:
        reference_total += sum(ref_counts.values())
        for unit, count in ref_counts.items():
            match_total += min(count, peer_counts[unit])
    peer_total = sum(peer_counts.values())
    recall = match_total / reference_total if reference_total > 0 else 0.0
    denominator = peer_total * len(reference_counts_list)
    precision = match_total / denominator if denominator > 0 else 0.0
    return ScoreTriple(precision, recall, harmonic_f(precision, recall))


def rouge_n(peer: Sentences, references: list[Sentences], n: int) -> ScoreTriple:
    """N-gram co-occurrence score for n in {1, 2}."""
    if n not in (1, 2):
        raise ValueError(f"n must be 1 or 2, got {n}")
    if not references:
        raise ValueError("at least one reference is required")
    return _overlap_score(
        ngram_counts(peer, n), [ngram_counts(ref, n) for ref in references]
    )


def rouge_su(
    peer: Sentences,
    references: list[Sentences],
    max_gap: int = 4,
    include_unigrams: bool = True,
) -> ScoreTriple:
    """Skip-bigram-with-unigrams score; defaults give a gap of four.

    With ``max_gap=0`` and ``include_unigrams=False`` this reduces exactly
    to the bigram variant of :func:`rouge_n`.
    """
    if not references:
        raise ValueError("at least one reference is required")
    return _overlap_score(
        skip_bigram_counts(peer, max_gap, include_unigrams),
        [skip_bigram_counts(ref, max_gap, include_unigrams) for ref in references],
    )
