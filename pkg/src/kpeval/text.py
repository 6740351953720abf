"""Unicode normalization, sentence segmentation, and tokenization.

Normalization is configurable per transform and idempotent for every
configuration:

- strip diacritics (tashkeel, U+064B..U+0652)
- strip tatweel/kashida (U+0640)
- unify alef variants: إ أ آ -> ا
- unify alef maqsura: ى -> ي
- unify ta marbuta: ة -> ه (off by default; it can merge distinct lemmas)
- lowercase ASCII Latin letters

Sentence boundaries are the fixed delimiter set {. ! ؟ ? ؛ newline};
tokens are whitespace-separated with edge punctuation stripped.
"""

import enum
import re
import unicodedata
from dataclasses import dataclass

_DIACRITICS = re.compile(r"[ً-ْ]")
_TATWEEL = "ـ"
_ALEF_VARIANTS = re.compile(r"[آأإ]")
_ALEF_MAQSURA = "ى"
_TA_MARBUTA = "ة"
_ASCII_UPPER = re.compile(r"[A-Z]")


@dataclass(frozen=True)
class NormalizationConfig:
    strip_diacritics: bool = True
    strip_tatweel: bool = True
    unify_alef: bool = True
    unify_alef_maqsura: bool = True
    unify_ta_marbuta: bool = False
    lowercase_latin: bool = True


DEFAULT_NORMALIZATION = NormalizationConfig()


class Terminator(enum.Enum):
    PERIOD = "period"
    QUESTION = "question"
    EXCLAMATION = "exclamation"
    NONE = "none"


@dataclass(frozen=True)
class RawSentence:
    """One segmented sentence: delimiter excluded, surrounding space stripped."""

    text: str
    index: int
    terminator: Terminator


@dataclass(frozen=True)
class SurfaceToken:
    text: str
    sentence_index: int
    position_in_sentence: int


def normalize(text: str, cfg: NormalizationConfig = DEFAULT_NORMALIZATION) -> str:
    """Apply the enabled character transforms; all other codepoints pass through."""
    if cfg.strip_diacritics:
        text = _DIACRITICS.sub("", text)
    if cfg.strip_tatweel:
        text = text.replace(_TATWEEL, "")
    if cfg.unify_alef:
        text = _ALEF_VARIANTS.sub("ا", text)
    if cfg.unify_alef_maqsura:
        text = text.replace(_ALEF_MAQSURA, "ي")
    if cfg.unify_ta_marbuta:
        text = text.replace(_TA_MARBUTA, "ه")
    if cfg.lowercase_latin:
        text = _ASCII_UPPER.sub(lambda m: m.group().lower(), text)
    return text


_SENTENCE_DELIMITERS = {
    ".": Terminator.PERIOD,
    "!": Terminator.EXCLAMATION,
    "؟": Terminator.QUESTION,  # ؟
    "?": Terminator.QUESTION,
    "؛": Terminator.NONE,  # ؛
    "\n": Terminator.NONE,
}


def split_sentences(text: str) -> list[RawSentence]:
    """Split normalized text into sentences; empty segments are dropped."""
    sentences: list[RawSentence] = []
    buf: list[str] = []

    def flush(terminator: Terminator) -> None:
        segment = "".join(buf).strip()
        buf.clear()
        if segment:
            sentences.append(RawSentence(segment, len(sentences), terminator))

    for ch in text:
        if ch in _SENTENCE_DELIMITERS:
            flush(_SENTENCE_DELIMITERS[ch])
        else:
            buf.append(ch)
    flush(Terminator.NONE)
    return sentences


def _strip_edge_punctuation(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(sentence: RawSentence) -> list[SurfaceToken]:
    """Whitespace-split a sentence; edge punctuation is stripped from each token."""
    tokens: list[SurfaceToken] = []
    for chunk in sentence.text.split():
        core = _strip_edge_punctuation(chunk)
        if core:
            tokens.append(SurfaceToken(core, sentence.index, len(tokens)))
    return tokens
