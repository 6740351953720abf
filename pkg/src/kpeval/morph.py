"""Lemma and part-of-speech assignment for tokens.

The analyzer is a deterministic chain: exact lexicon lookup, then a
clitic-stripping heuristic that retries the lexicon, then an identity
fallback, so every token receives exactly one annotation. The lexicon is
a plain TSV file and is immutable once loaded; it can be shared across
worker processes.
"""

import enum
import logging
from dataclasses import dataclass

from .errors import LexiconError
from .text import (
    DEFAULT_NORMALIZATION,
    NormalizationConfig,
    RawSentence,
    SurfaceToken,
    Terminator,
    normalize,
    tokenize,
)

logger = logging.getLogger(__name__)


class PosTag(enum.Enum):
    GeneralNoun = "GeneralNoun"
    DefinedNoun = "DefinedNoun"
    UndefinedNoun = "UndefinedNoun"
    CopulativeNoun = "CopulativeNoun"
    ProperNoun = "ProperNoun"
    PlaceNoun = "PlaceNoun"
    DeclinedNoun = "DeclinedNoun"
    TimeNoun = "TimeNoun"
    AugmentedNoun = "AugmentedNoun"
    Adjective = "Adjective"
    Preposition = "Preposition"
    Verb = "Verb"
    Particle = "Particle"
    Pronoun = "Pronoun"
    Number = "Number"
    Unknown = "Unknown"


class AnalysisOrigin(enum.Enum):
    LEXICON = "lexicon"
    HEURISTIC = "heuristic"
    IDENTITY = "identity"


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: PosTag


@dataclass
class Lexicon:
    """Exact-match map from normalized surface form to (lemma, POS)."""

    entries: dict[str, LexiconEntry]
    source_path: str = "<memory>"

    def lookup(self, surface: str) -> LexiconEntry | None:
        return self.entries.get(surface)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    lemma: str
    pos: PosTag
    origin: AnalysisOrigin
    sentence_index: int
    position_in_sentence: int


@dataclass
class AnnotatedSentence:
    tokens: list[AnnotatedToken]
    is_question: bool
    verb_count: int
    index: int


def load_lexicon(
    path: str, normalization: NormalizationConfig = DEFAULT_NORMALIZATION
) -> Lexicon:
    """Load a UTF-8 TSV lexicon: ``surface<TAB>lemma<TAB>pos`` per row.

    ``#``-prefixed lines and blank lines are skipped. Surface and lemma are
    normalized on load so lookups agree with the tokenizer output. A
    duplicated surface form keeps the later row and logs a warning.
    """
    entries: dict[str, LexiconEntry] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon: {exc}") from exc
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise LexiconError(
                    f"{path}:{lineno}: expected 3 tab-separated fields, got {len(fields)}"
                )
            surface_raw, lemma_raw, pos_name = (f.strip() for f in fields)
            try:
                pos = PosTag[pos_name]
            except KeyError:
                raise LexiconError(
                    f"{path}:{lineno}: unknown POS tag {pos_name!r}"
                ) from None
            surface = normalize(surface_raw, normalization)
            lemma = normalize(lemma_raw, normalization)
            if not surface or not lemma:
                raise LexiconError(f"{path}:{lineno}: empty surface or lemma")
            if surface in entries:
                logger.warning(
                    "%s:%d: duplicate surface form %r, keeping the later entry",
                    path,
                    lineno,
                    surface,
                )
            entries[surface] = LexiconEntry(lemma, pos)
    return Lexicon(entries, str(path))


# Proclitics stripped from the front, in this order, each class at most once.
_CONJUNCTIONS = ("و", "ف")  # و ف
_PREPOSITIONS = ("ب", "ك", "ل")  # ب ك ل
_DEFINITE_ARTICLE = "ال"  # ال
# Inflectional suffixes stripped from the end, at most one.
_SUFFIXES = (
    "ون",  # ون
    "ين",  # ين
    "ات",  # ات
    "ة",  # ة
    "ه",  # ه
    "ها",  # ها
    "هم",  # هم
)


def _proclitic_stages(surface: str) -> list[str]:
    """Successive remainders after stripping conjunction, preposition, article."""
    stages: list[str] = []
    rest = surface
    for group in (_CONJUNCTIONS, _PREPOSITIONS):
        for clitic in group:
            if rest.startswith(clitic) and len(rest) > len(clitic):
                rest = rest[len(clitic) :]
                stages.append(rest)
                break
    if rest.startswith(_DEFINITE_ARTICLE) and len(rest) > len(_DEFINITE_ARTICLE):
        stages.append(rest[len(_DEFINITE_ARTICLE) :])
    return stages


def analyze(token: SurfaceToken, lex: Lexicon) -> AnnotatedToken:
    """Annotate one token; total and deterministic.

    Chain: exact lookup on the surface form; lexicon retry after each
    proclitic strip; lexicon retry after a single suffix strip (applied to
    the surface and to each proclitic remainder); identity fallback with
    POS ``Unknown``. A stripped preposition does not change the POS of the
    matched remainder.
    """

    def annotated(lemma: str, pos: PosTag, origin: AnalysisOrigin) -> AnnotatedToken:
        return AnnotatedToken(
            token.text, lemma, pos, origin, token.sentence_index, token.position_in_sentence
        )

    entry = lex.lookup(token.text)
    if entry is not None:
        return annotated(entry.lemma, entry.pos, AnalysisOrigin.LEXICON)

    stages = _proclitic_stages(token.text)
    for stage in stages:
        entry = lex.lookup(stage)
        if entry is not None:
            return annotated(entry.lemma, entry.pos, AnalysisOrigin.HEURISTIC)

    for base in (token.text, *stages):
        for suffix in _SUFFIXES:
            if base.endswith(suffix) and len(base) > len(suffix):
                entry = lex.lookup(base[: -len(suffix)])
                if entry is not None:
                    return annotated(entry.lemma, entry.pos, AnalysisOrigin.HEURISTIC)

    return annotated(token.text, PosTag.Unknown, AnalysisOrigin.IDENTITY)


def annotate_document(
    sentences: list[RawSentence], lex: Lexicon
) -> list[AnnotatedSentence]:
    """Tokenize and annotate every sentence, recording verb counts and question flags."""
    document: list[AnnotatedSentence] = []
    for sentence in sentences:
        tokens = [analyze(tok, lex) for tok in tokenize(sentence)]
        document.append(
            AnnotatedSentence(
                tokens=tokens,
                is_question=sentence.terminator is Terminator.QUESTION,
                verb_count=sum(1 for t in tokens if t.pos is PosTag.Verb),
                index=sentence.index,
            )
        )
    return document
