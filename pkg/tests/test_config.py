"""Extractor configuration serialization."""

import json

import pytest

from kpeval.config import config_from_dict, config_to_dict, load_config, save_config
from kpeval.errors import ConfigError
from kpeval.extract import ExtractorConfig, WeightVector
from kpeval.text import NormalizationConfig


class TestRoundTrip:
    def test_default_config(self, tmp_path):
        cfg = ExtractorConfig()
        path = tmp_path / "config.json"
        save_config(cfg, path)
        assert load_config(path) == cfg

    def test_custom_config(self, tmp_path):
        cfg = ExtractorConfig(
            normalization=NormalizationConfig(unify_ta_marbuta=True),
            weights=WeightVector.from_sequence([1, 2, 3, 4, 5, 6, 7, 8]),
            k=25,
            score_threshold=0.4,
        )
        path = tmp_path / "config.json"
        save_config(cfg, path)
        assert load_config(path) == cfg

    def test_dict_defaults(self):
        cfg = config_from_dict({})
        assert cfg == ExtractorConfig()

    def test_dict_echo(self):
        cfg = ExtractorConfig(k=3)
        assert config_from_dict(config_to_dict(cfg)) == cfg


class TestValidation:
    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError, match="mystery"):
            config_from_dict({"mystery": 1})

    def test_unknown_normalization_key(self):
        with pytest.raises(ConfigError, match="strip_everything"):
            config_from_dict({"normalization": {"strip_everything": True}})

    def test_wrong_weight_count(self):
        with pytest.raises(ConfigError, match="8"):
            config_from_dict({"weights": [1, 2, 3]})

    def test_negative_weight(self):
        with pytest.raises(ConfigError):
            config_from_dict({"weights": [1, -1, 1, 1, 1, 1, 1, 1]})

    def test_non_object_config(self):
        with pytest.raises(ConfigError):
            config_from_dict([1, 2, 3])

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigError, match="JSON"):
            load_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "absent.json")

    def test_invalid_k(self):
        with pytest.raises(ConfigError):
            config_from_dict({"k": 0})


class TestFileFormat:
    def test_saved_file_is_sorted_json(self, tmp_path):
        path = tmp_path / "config.json"
        save_config(ExtractorConfig(), path)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert set(data) == {"normalization", "weights", "k", "score_threshold"}
        assert data["k"] == 10
        assert len(data["weights"]) == 8
