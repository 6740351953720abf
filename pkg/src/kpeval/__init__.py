"""Keyphrase-overlap evaluation of text summaries.

The package scores a candidate summary by extracting short noun-anchored
keyphrases in lemma form from it and from one or more reference
summaries, then measuring phrase overlap as recall, precision, and
F-measure. N-gram and skip-bigram overlap baselines and metric-agreement
statistics (Pearson, Spearman) round out the toolkit, with a batch
command-line interface under the ``kpeval`` entry point.
"""

__version__ = "0.1.0"

from .correlation import (
    CorrelationReport,
    MetricTable,
    average_ranks,
    correlate_metrics,
    pearson,
    spearman,
)
from .errors import ConfigError, DatasetError, KpevalError, LexiconError
from .extract import (
    CandidatePhrase,
    ExtractorConfig,
    FeatureVector,
    Keyphrase,
    WeightVector,
    extract_keyphrases,
)
from .metric import (
    MatchStatistics,
    ScoreTriple,
    average_triples,
    evaluate_peer,
    evaluate_system,
    harmonic_f,
    keyphrase_set,
    match_counts,
    score_summary,
)
from .morph import AnnotatedSentence, AnnotatedToken, Lexicon, PosTag, load_lexicon
from .rouge import rouge_n, rouge_su
from .text import DEFAULT_NORMALIZATION, NormalizationConfig, normalize, split_sentences
from .train import train_weights

__all__ = [
    "__version__",
    "AnnotatedSentence",
    "AnnotatedToken",
    "CandidatePhrase",
    "ConfigError",
    "CorrelationReport",
    "DatasetError",
    "DEFAULT_NORMALIZATION",
    "ExtractorConfig",
    "FeatureVector",
    "Keyphrase",
    "KpevalError",
    "Lexicon",
    "LexiconError",
    "MatchStatistics",
    "MetricTable",
    "NormalizationConfig",
    "PosTag",
    "ScoreTriple",
    "WeightVector",
    "average_ranks",
    "average_triples",
    "correlate_metrics",
    "evaluate_peer",
    "evaluate_system",
    "extract_keyphrases",
    "harmonic_f",
    "keyphrase_set",
    "load_lexicon",
    "match_counts",
    "normalize",
    "pearson",
    "rouge_n",
    "rouge_su",
    "score_summary",
    "spearman",
    "split_sentences",
    "train_weights",
]
