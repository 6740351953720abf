"""Noun-anchored keyphrase extraction.

Candidates are all 1-3 token windows inside a sentence. A candidate
survives three part-of-speech rules (noun-class start, noun-or-adjective
end, constrained middle word), is scored by a weighted mean of eight
bounded features, and the highest-scoring instance of each distinct lemma
sequence is kept. The output keyphrases are lemma sequences, so two
surface variants of the same phrase compare equal downstream.
"""

from collections import Counter
from dataclasses import dataclass, field

from .morph import AnnotatedSentence, AnnotatedToken, Lexicon, PosTag, annotate_document
from .text import DEFAULT_NORMALIZATION, NormalizationConfig, normalize, split_sentences

MAX_PHRASE_LENGTH = 3

# A candidate phrase may start only with one of these noun classes...
START_TAGS = frozenset(
    {
        PosTag.GeneralNoun,
        PosTag.DefinedNoun,
        PosTag.UndefinedNoun,
        PosTag.CopulativeNoun,
        PosTag.ProperNoun,
    }
)
# ...may end only with one of these...
END_TAGS = frozenset(
    {
        PosTag.GeneralNoun,
        PosTag.PlaceNoun,
        PosTag.ProperNoun,
        PosTag.DeclinedNoun,
        PosTag.TimeNoun,
        PosTag.AugmentedNoun,
        PosTag.Adjective,
    }
)
# ...and the middle word of a three-word phrase may additionally be a preposition.
MIDDLE_TAGS = frozenset(END_TAGS | {PosTag.Preposition})


@dataclass(frozen=True)
class CandidatePhrase:
    tokens: tuple[AnnotatedToken, ...]
    lemma_seq: tuple[str, ...]
    sentence_index: int
    start_position: int

    @property
    def surface(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class FeatureVector:
    """Eight per-candidate features, each normalized into [0, 1]."""

    f1_num_words: float
    f2_phrase_freq: float
    f3_max_word_freq: float
    f4_sentence_location: float
    f5_position_in_sentence: float
    f6_relative_length: float
    f7_verb_content: float
    f8_not_question: float

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.f1_num_words,
            self.f2_phrase_freq,
            self.f3_max_word_freq,
            self.f4_sentence_location,
            self.f5_position_in_sentence,
            self.f6_relative_length,
            self.f7_verb_content,
            self.f8_not_question,
        )


@dataclass(frozen=True)
class WeightVector:
    """Non-negative feature weights; scoring normalizes by their sum."""

    w1: float
    w2: float
    w3: float
    w4: float
    w5: float
    w6: float
    w7: float
    w8: float

    def __post_init__(self) -> None:
        for name, value in zip(self.field_names(), self.as_tuple()):
            if value < 0:
                raise ValueError(f"negative weight {name}={value}")

    @staticmethod
    def field_names() -> tuple[str, ...]:
        return ("w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.w1, self.w2, self.w3, self.w4, self.w5, self.w6, self.w7, self.w8)

    @classmethod
    def uniform(cls) -> "WeightVector":
        return cls(*([1.0 / 8.0] * 8))

    @classmethod
    def from_sequence(cls, values) -> "WeightVector":
        values = tuple(float(v) for v in values)
        if len(values) != 8:
            raise ValueError(f"expected 8 weights, got {len(values)}")
        return cls(*values)


@dataclass(frozen=True)
class Keyphrase:
    lemma_seq: tuple[str, ...]
    score: float
    first_occurrence: tuple[int, int]  # (sentence index, start position)
    surface_example: str


@dataclass(frozen=True)
class ExtractorConfig:
    normalization: NormalizationConfig = DEFAULT_NORMALIZATION
    weights: WeightVector = field(default_factory=WeightVector.uniform)
    k: int = 10
    score_threshold: float | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


def annotate_text(
    text: str, lex: Lexicon, normalization: NormalizationConfig = DEFAULT_NORMALIZATION
) -> list[AnnotatedSentence]:
    """Normalize, segment, tokenize, and annotate a raw document."""
    return annotate_document(split_sentences(normalize(text, normalization)), lex)


def generate_candidates(doc: list[AnnotatedSentence]) -> list[CandidatePhrase]:
    """All 1-3 token windows within each sentence, in document order."""
    candidates: list[CandidatePhrase] = []
    for sentence in doc:
        tokens = sentence.tokens
        for start in range(len(tokens)):
            for length in range(1, MAX_PHRASE_LENGTH + 1):
                if start + length > len(tokens):
                    break
                window = tuple(tokens[start : start + length])
                candidates.append(
                    CandidatePhrase(
                        tokens=window,
                        lemma_seq=tuple(t.lemma for t in window),
                        sentence_index=sentence.index,
                        start_position=start,
                    )
                )
    return candidates


def filter_syntactic(candidate: CandidatePhrase) -> bool:
    """Part-of-speech gate; a one-word phrase must pass both the start and end rule."""
    tags = [t.pos for t in candidate.tokens]
    if tags[0] not in START_TAGS:
        return False
    if tags[-1] not in END_TAGS:
        return False
    if len(tags) == 3 and tags[1] not in MIDDLE_TAGS:
        return False
    return True


@dataclass
class DocumentStats:
    """Document-level counts shared by the frequency features."""

    candidate_counts: dict[int, Counter]  # phrase length -> lemma_seq -> count
    accepted_max_count: dict[int, int]  # phrase length -> max count among accepted
    lemma_frequency: Counter  # lemma -> token occurrences in the document
    max_lemma_frequency: int
    num_sentences: int

    @classmethod
    def from_document(cls, doc: list[AnnotatedSentence]) -> "DocumentStats":
        candidate_counts: dict[int, Counter] = {
            n: Counter() for n in range(1, MAX_PHRASE_LENGTH + 1)
        }
        accepted_max: dict[int, int] = {n: 0 for n in range(1, MAX_PHRASE_LENGTH + 1)}
        candidates = generate_candidates(doc)
        for cand in candidates:
            candidate_counts[len(cand.lemma_seq)][cand.lemma_seq] += 1
        for cand in candidates:
            if filter_syntactic(cand):
                n = len(cand.lemma_seq)
                count = candidate_counts[n][cand.lemma_seq]
                if count > accepted_max[n]:
                    accepted_max[n] = count
        lemma_frequency = Counter(
            tok.lemma for sentence in doc for tok in sentence.tokens
        )
        max_lemma = max(lemma_frequency.values(), default=0)
        return cls(candidate_counts, accepted_max, lemma_frequency, max_lemma, len(doc))


def compute_features(
    candidate: CandidatePhrase,
    doc: list[AnnotatedSentence],
    stats: DocumentStats | None = None,
) -> FeatureVector:
    """Feature vector for an accepted candidate.

    ``stats`` may be passed to amortize the document scan across candidates;
    it must have been built from the same ``doc``.
    """
    if stats is None:
        stats = DocumentStats.from_document(doc)
    sentence = doc[candidate.sentence_index]
    length = len(candidate.tokens)
    sentence_len = len(sentence.tokens)

    phrase_count = stats.candidate_counts[length][candidate.lemma_seq]
    max_phrase_count = max(stats.accepted_max_count[length], 1)
    word_freq = max(stats.lemma_frequency[t.lemma] for t in candidate.tokens)
    max_word_freq = max(stats.max_lemma_frequency, 1)

    return FeatureVector(
        f1_num_words=length / MAX_PHRASE_LENGTH,
        f2_phrase_freq=phrase_count / max_phrase_count,
        f3_max_word_freq=word_freq / max_word_freq,
        f4_sentence_location=1.0
        - candidate.sentence_index / max(1, stats.num_sentences - 1),
        f5_position_in_sentence=1.0
        - candidate.start_position / max(1, sentence_len - 1),
        f6_relative_length=length / sentence_len,
        f7_verb_content=1.0 - sentence.verb_count / sentence_len,
        f8_not_question=0.0 if sentence.is_question else 1.0,
    )


def score(features: FeatureVector, weights: WeightVector) -> float:
    """Weighted mean of the features; invariant under positive weight rescaling."""
    w = weights.as_tuple()
    total = sum(w)
    if total <= 0:
        raise ValueError("all weights are zero")
    return sum(wi * fi for wi, fi in zip(w, features.as_tuple())) / total


def select_keyphrases(
    scored: list[tuple[CandidatePhrase, float]],
    k: int,
    score_threshold: float | None = None,
) -> list[Keyphrase]:
    """Deduplicate by lemma sequence, rank, and return the top ``k``.

    For duplicate lemma sequences the highest-scoring instance wins; score
    ties keep the earliest occurrence. Ranking is score-descending with
    ties broken by earlier occurrence, then lexicographic lemma sequence.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    best: dict[tuple[str, ...], tuple[CandidatePhrase, float]] = {}
    for cand, cand_score in scored:
        position = (cand.sentence_index, cand.start_position)
        kept = best.get(cand.lemma_seq)
        if (
            kept is None
            or cand_score > kept[1]
            or (
                cand_score == kept[1]
                and position < (kept[0].sentence_index, kept[0].start_position)
            )
        ):
            best[cand.lemma_seq] = (cand, cand_score)

    keyphrases = [
        Keyphrase(
            lemma_seq=lemma_seq,
            score=cand_score,
            first_occurrence=(cand.sentence_index, cand.start_position),
            surface_example=cand.surface,
        )
        for lemma_seq, (cand, cand_score) in best.items()
        if score_threshold is None or cand_score >= score_threshold
    ]
    keyphrases.sort(key=lambda kp: (-kp.score, kp.first_occurrence, kp.lemma_seq))
    return keyphrases[:k]


def extract_keyphrases(
    text: str, lex: Lexicon, cfg: ExtractorConfig | None = None
) -> list[Keyphrase]:
    """Full pipeline from raw text to ranked keyphrases; deterministic."""
    if cfg is None:
        cfg = ExtractorConfig()
    doc = annotate_text(text, lex, cfg.normalization)
    stats = DocumentStats.from_document(doc)
    scored = [
        (cand, score(compute_features(cand, doc, stats), cfg.weights))
        for cand in generate_candidates(doc)
        if filter_syntactic(cand)
    ]
    return select_keyphrases(scored, cfg.k, cfg.score_threshold)
