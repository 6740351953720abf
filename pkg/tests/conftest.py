"""Shared fixtures and corpus builders for the test suite."""

import random
from pathlib import Path

import pytest

from kpeval.morph import Lexicon, LexiconEntry, PosTag, load_lexicon

DATA_DIR = Path(__file__).parent / "data"

PHRASE_A = "المعاهد العالية بالقرى"
PHRASE_B = "الأبراج العالية بالقرى"

# Lemma sequences after default normalization (hamza-alef unified).
KEYPHRASES_A = {
    ("المعاهد",),
    ("المعاهد", "العالية"),
    ("المعاهد", "العالية", "قرية"),
    ("قرية",),
}
KEYPHRASES_B = {
    ("الابراج",),
    ("الابراج", "العالية"),
    ("الابراج", "العالية", "قرية"),
    ("قرية",),
}


@pytest.fixture(scope="session")
def demo_lexicon_path() -> Path:
    return DATA_DIR / "demo_lexicon.tsv"


@pytest.fixture(scope="session")
def demo_lexicon(demo_lexicon_path) -> Lexicon:
    return load_lexicon(str(demo_lexicon_path))


def build_ascii_lexicon() -> Lexicon:
    """Latin-script vocabulary for fuzz tests, stable under normalization.

    ``nounNNx`` entries are inflected variants sharing the lemma of
    ``nounNN``, mirroring how two plural forms map to one lemma.
    """
    entries: dict[str, LexiconEntry] = {}
    for i in range(12):
        entries[f"noun{i:02d}"] = LexiconEntry(f"noun{i:02d}", PosTag.GeneralNoun)
        entries[f"noun{i:02d}x"] = LexiconEntry(f"noun{i:02d}", PosTag.GeneralNoun)
    for i in range(10):
        entries[f"znoun{i:02d}"] = LexiconEntry(f"znoun{i:02d}", PosTag.GeneralNoun)
    for i in range(6):
        entries[f"adj{i}"] = LexiconEntry(f"adj{i}", PosTag.Adjective)
    for i in range(4):
        entries[f"verb{i}"] = LexiconEntry(f"verb{i}", PosTag.Verb)
    for i in range(3):
        entries[f"prep{i}"] = LexiconEntry(f"prep{i}", PosTag.Preposition)
    for i in range(4):
        entries[f"name{i}"] = LexiconEntry(f"name{i}", PosTag.ProperNoun)
    entries["place0"] = LexiconEntry("place0", PosTag.PlaceNoun)
    entries["time0"] = LexiconEntry("time0", PosTag.TimeNoun)
    entries["part0"] = LexiconEntry("part0", PosTag.Particle)
    return Lexicon(entries=entries, source_path="<test>")


@pytest.fixture(scope="session")
def ascii_lexicon() -> Lexicon:
    return build_ascii_lexicon()


NOUN_WORDS = [f"noun{i:02d}" for i in range(12)]
ALT_NOUN_WORDS = [f"znoun{i:02d}" for i in range(10)]
OTHER_WORDS = (
    [f"adj{i}" for i in range(6)]
    + [f"verb{i}" for i in range(4)]
    + [f"prep{i}" for i in range(3)]
    + [f"name{i}" for i in range(4)]
    + ["place0", "time0", "part0", "mystery", "qqq"]
)


def random_document(
    rng: random.Random,
    nouns: list[str] = NOUN_WORDS,
    min_sentences: int = 1,
    max_sentences: int = 5,
) -> str:
    """Random multi-sentence text that always yields at least one keyphrase.

    Every sentence starts with a noun, so a noun unigram always survives
    the start/end filter rules.
    """
    sentences = []
    for _ in range(rng.randint(min_sentences, max_sentences)):
        words = [rng.choice(nouns)]
        for _ in range(rng.randint(0, 7)):
            pool = nouns if rng.random() < 0.5 else OTHER_WORDS
            words.append(rng.choice(pool))
        sentences.append(" ".join(words) + rng.choice([".", ".", ".", "!", "؟"]))
    return " ".join(sentences)


def write_dataset(root: Path, topics: dict[str, tuple[dict[str, str], dict[str, str]]]) -> None:
    """Materialize a dataset tree: topic -> (peers by system id, models by id)."""
    for topic, (peers, models) in topics.items():
        peers_dir = root / topic / "peers"
        models_dir = root / topic / "models"
        peers_dir.mkdir(parents=True)
        models_dir.mkdir(parents=True)
        for system_id, text in peers.items():
            (peers_dir / f"{system_id}.txt").write_text(text, encoding="utf-8")
        for model_id, text in models.items():
            (models_dir / f"{model_id}.txt").write_text(text, encoding="utf-8")
