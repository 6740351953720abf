"""JSON persistence for extractor configuration."""

import dataclasses
import json
from pathlib import Path

from .errors import ConfigError
from .extract import ExtractorConfig, WeightVector
from .text import NormalizationConfig


def config_to_dict(cfg: ExtractorConfig) -> dict:
    return {
        "normalization": dataclasses.asdict(cfg.normalization),
        "weights": list(cfg.weights.as_tuple()),
        "k": cfg.k,
        "score_threshold": cfg.score_threshold,
    }


def _check_keys(mapping: dict, allowed: set[str], context: str) -> None:
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"unknown {context} keys: {sorted(unknown)}")


def config_from_dict(data: dict) -> ExtractorConfig:
    if not isinstance(data, dict):
        raise ConfigError(f"configuration must be an object, got {type(data).__name__}")
    _check_keys(data, {"normalization", "weights", "k", "score_threshold"}, "config")
    try:
        norm_data = data.get("normalization", {})
        if not isinstance(norm_data, dict):
            raise ConfigError("'normalization' must be an object")
        norm_fields = {f.name for f in dataclasses.fields(NormalizationConfig)}
        _check_keys(norm_data, norm_fields, "normalization")
        normalization = NormalizationConfig(**norm_data)

        weights_data = data.get("weights")
        if weights_data is None:
            weights = WeightVector.uniform()
        else:
            weights = WeightVector.from_sequence(weights_data)

        return ExtractorConfig(
            normalization=normalization,
            weights=weights,
            k=int(data.get("k", 10)),
            score_threshold=(
                None
                if data.get("score_threshold") is None
                else float(data["score_threshold"])
            ),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid configuration: {exc}") from exc


def load_config(path: str | Path) -> ExtractorConfig:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def save_config(cfg: ExtractorConfig, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        json.dump(config_to_dict(cfg), fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")
