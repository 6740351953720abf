"""Evaluation dataset discovery.

A dataset is a directory of topics, each holding peer summaries to score
and model (reference) summaries to score against::

    root/<topic>/peers/<system_id>.txt
    root/<topic>/models/<model_id>.txt

A JSON manifest can stand in for the directory convention when files
live elsewhere.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import DatasetError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DatasetLayout:
    root: Path | None
    topics: tuple[str, ...]
    peers: dict[str, dict[str, Path]]  # topic -> system_id -> file
    models: dict[str, tuple[Path, ...]]  # topic -> reference files

    def system_ids(self) -> tuple[str, ...]:
        """Union of system ids over all topics, sorted."""
        ids: set[str] = set()
        for by_system in self.peers.values():
            ids.update(by_system)
        return tuple(sorted(ids))


def scan_dataset(root: str | Path) -> DatasetLayout:
    """Discover topics under ``root`` using the directory convention."""
    root = Path(root)
    if not root.is_dir():
        raise DatasetError(f"dataset root {root} is not a directory")
    topics: list[str] = []
    peers: dict[str, dict[str, Path]] = {}
    models: dict[str, tuple[Path, ...]] = {}
    for topic_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        topic = topic_dir.name
        model_files = _text_files(topic_dir / "models")
        if not model_files:
            raise DatasetError(f"topic {topic} has no model summaries")
        peer_files = _text_files(topic_dir / "peers")
        if not peer_files:
            logger.warning("topic %s has no peer summaries", topic)
        topics.append(topic)
        peers[topic] = {path.stem: path for path in peer_files}
        models[topic] = tuple(model_files)
    if not topics:
        raise DatasetError(f"no topics found under {root}")
    return DatasetLayout(root=root, topics=tuple(topics), peers=peers, models=models)


def _text_files(directory: Path) -> list[Path]:
    if not directory.is_dir():
        return []
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix == ".txt")


def load_manifest(path: str | Path) -> DatasetLayout:
    """Build a layout from a JSON manifest.

    Format::

        {"topics": {"<topic>": {"peers": {"<system_id>": "<path>"},
                                "models": ["<path>", ...]}}}

    Relative paths are resolved against the manifest's directory. Every
    listed file must exist.
    """
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DatasetError(f"cannot read manifest {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DatasetError(f"manifest {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("topics"), dict):
        raise DatasetError(f"manifest {path} must contain a 'topics' object")
    base = path.parent
    topics: list[str] = []
    peers: dict[str, dict[str, Path]] = {}
    models: dict[str, tuple[Path, ...]] = {}
    for topic in sorted(data["topics"]):
        entry = data["topics"][topic]
        if not isinstance(entry, dict):
            raise DatasetError(f"manifest topic {topic} must be an object")
        model_paths = tuple(
            _resolve(base, p, topic) for p in entry.get("models", [])
        )
        if not model_paths:
            raise DatasetError(f"topic {topic} has no model summaries")
        peer_map = entry.get("peers", {})
        if not isinstance(peer_map, dict):
            raise DatasetError(f"manifest topic {topic} 'peers' must be an object")
        topics.append(topic)
        peers[topic] = {
            system: _resolve(base, p, topic) for system, p in sorted(peer_map.items())
        }
        models[topic] = model_paths
    if not topics:
        raise DatasetError(f"no topics found in manifest {path}")
    return DatasetLayout(root=None, topics=tuple(topics), peers=peers, models=models)


def _resolve(base: Path, raw: str, topic: str) -> Path:
    resolved = Path(raw)
    if not resolved.is_absolute():
        resolved = base / resolved
    if not resolved.is_file():
        raise DatasetError(f"topic {topic} references missing file {resolved}")
    return resolved


def read_text(path: Path) -> str:
    """UTF-8 file contents, with dataset-level error reporting."""
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
