"""Normalization, sentence segmentation, and tokenization."""

import random

import pytest

from kpeval.text import (
    DEFAULT_NORMALIZATION,
    NormalizationConfig,
    RawSentence,
    Terminator,
    normalize,
    split_sentences,
    tokenize,
)


class TestNormalize:
    def test_strips_diacritics(self):
        assert normalize("القُرَى", NormalizationConfig(unify_alef_maqsura=False)) == "القرى"

    def test_empty_input(self):
        assert normalize("", DEFAULT_NORMALIZATION) == ""

    def test_unifies_alef_variants(self):
        assert normalize("إأآ", DEFAULT_NORMALIZATION) == "ااا"

    def test_strips_tatweel(self):
        assert normalize("كتـــاب", DEFAULT_NORMALIZATION) == "كتاب"

    def test_unifies_alef_maqsura(self):
        assert normalize("القرى", DEFAULT_NORMALIZATION) == "القري"

    def test_ta_marbuta_kept_by_default(self):
        assert normalize("قرية", DEFAULT_NORMALIZATION) == "قرية"

    def test_ta_marbuta_unified_when_enabled(self):
        cfg = NormalizationConfig(unify_ta_marbuta=True)
        assert normalize("قرية", cfg) == "قريه"

    def test_lowercases_ascii(self):
        assert normalize("Abc XYZ", DEFAULT_NORMALIZATION) == "abc xyz"

    def test_disabled_flags_leave_text_alone(self):
        cfg = NormalizationConfig(
            strip_diacritics=False,
            strip_tatweel=False,
            unify_alef=False,
            unify_alef_maqsura=False,
            unify_ta_marbuta=False,
            lowercase_latin=False,
        )
        text = "القُرَى إأآ كتـــاب Abc"
        assert normalize(text, cfg) == text

    def test_idempotent_for_every_config(self):
        rng = random.Random(1234)
        alphabet = "ابتةثجقرىيإأآ ًٌٍَُِّْـxyzXYZ.,؟"
        flags = [True, False]
        for _ in range(300):
            cfg = NormalizationConfig(
                strip_diacritics=rng.choice(flags),
                strip_tatweel=rng.choice(flags),
                unify_alef=rng.choice(flags),
                unify_alef_maqsura=rng.choice(flags),
                unify_ta_marbuta=rng.choice(flags),
                lowercase_latin=rng.choice(flags),
            )
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))
            once = normalize(text, cfg)
            assert normalize(once, cfg) == once


class TestSplitSentences:
    def test_period_and_question(self):
        sentences = split_sentences("A. B؟")
        assert [(s.text, s.terminator) for s in sentences] == [
            ("A", Terminator.PERIOD),
            ("B", Terminator.QUESTION),
        ]

    def test_unterminated_text(self):
        assert split_sentences("A") == [RawSentence("A", 0, Terminator.NONE)]

    def test_empty_segment_dropped(self):
        assert [s.text for s in split_sentences("A.. B")] == ["A", "B"]

    def test_empty_text(self):
        assert split_sentences("") == []

    def test_exclamation_and_latin_question(self):
        sentences = split_sentences("go! why?")
        assert [s.terminator for s in sentences] == [
            Terminator.EXCLAMATION,
            Terminator.QUESTION,
        ]

    def test_semicolon_and_newline_have_no_terminator_kind(self):
        sentences = split_sentences("A؛ B\nC")
        assert [(s.text, s.terminator) for s in sentences] == [
            ("A", Terminator.NONE),
            ("B", Terminator.NONE),
            ("C", Terminator.NONE),
        ]

    def test_indices_contiguous(self):
        rng = random.Random(99)
        chars = "ab c.?!؟؛\n"
        for _ in range(200):
            text = "".join(rng.choice(chars) for _ in range(rng.randint(0, 60)))
            sentences = split_sentences(text)
            assert [s.index for s in sentences] == list(range(len(sentences)))

    def test_rejoin_preserves_sentence_count(self):
        rng = random.Random(7)
        words = ["كتاب", "قلم", "word", "x"]
        for _ in range(100):
            n = rng.randint(1, 6)
            text = ". ".join(
                " ".join(rng.choice(words) for _ in range(rng.randint(1, 4)))
                for _ in range(n)
            )
            sentences = split_sentences(text)
            assert len(sentences) == n
            rejoined = ". ".join(s.text for s in sentences)
            assert len(split_sentences(rejoined)) == n


class TestTokenize:
    def test_three_word_phrase(self):
        sentence = RawSentence("المعاهد العالية بالقرى", 0, Terminator.NONE)
        assert [t.text for t in tokenize(sentence)] == ["المعاهد", "العالية", "بالقرى"]

    def test_whitespace_only(self):
        assert tokenize(RawSentence("  ", 0, Terminator.NONE)) == []

    def test_edge_punctuation_stripped(self):
        sentence = RawSentence("كتاب، قلم", 0, Terminator.NONE)
        assert [t.text for t in tokenize(sentence)] == ["كتاب", "قلم"]

    def test_punctuation_only_token_dropped(self):
        sentence = RawSentence("a -- b", 3, Terminator.NONE)
        tokens = tokenize(sentence)
        assert [t.text for t in tokens] == ["a", "b"]
        assert [t.position_in_sentence for t in tokens] == [0, 1]
        assert all(t.sentence_index == 3 for t in tokens)

    def test_tokens_nonempty_and_whitespace_free(self):
        rng = random.Random(5)
        chars = "اب ق,.«»()x "
        for _ in range(200):
            text = "".join(rng.choice(chars) for _ in range(rng.randint(0, 40)))
            tokens = tokenize(RawSentence(text, 0, Terminator.NONE))
            for tok in tokens:
                assert tok.text
                assert not any(c.isspace() for c in tok.text)
            assert [t.position_in_sentence for t in tokens] == list(range(len(tokens)))
