"""Agreement statistics between automatic metrics over a set of systems.

A metric table aligns one score vector per metric against a shared
system list. Pearson measures linear agreement of raw scores, Spearman
measures agreement of the induced rankings, and tied scores receive
averaged ranks.
"""

import math
from dataclasses import dataclass

import numpy as np


def pearson(x, y) -> float:
    """Pearson product-moment correlation, clamped into [-1, 1].

    Raises ``ValueError`` on length mismatch, fewer than two points, or a
    zero-variance input, for which the coefficient is undefined.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.ndim != 1 or len(x) < 2:
        raise ValueError("pearson requires two 1-d sequences of length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = math.sqrt(float(dx @ dx))
    sy = math.sqrt(float(dy @ dy))
    if sx == 0.0 or sy == 0.0:
        raise ValueError("pearson is undefined for a constant sequence")
    # Exact agreement (or exact opposition) must score exactly +/-1, which
    # the quotient below can miss by one rounding step.
    if np.array_equal(dx, dy):
        return 1.0
    if np.array_equal(dx, -dy):
        return -1.0
    r = float(dx @ dy) / (sx * sy)
    return max(-1.0, min(1.0, r))


def average_ranks(values) -> list[float]:
    """Ranks starting at 1, with tied values sharing their average rank."""
    values = list(values)
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        shared = (i + j) / 2.0 + 1.0
        for idx in order[i : j + 1]:
            ranks[idx] = shared
        i = j + 1
    return ranks


def spearman(x, y) -> float:
    """Spearman rank correlation: Pearson on average ranks."""
    x = list(x)
    y = list(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("spearman requires sequences of length >= 2")
    return pearson(average_ranks(x), average_ranks(y))


@dataclass(frozen=True)
class MetricTable:
    """Score vectors of several metrics aligned over shared systems."""

    systems: tuple[str, ...]
    scores: dict[str, tuple[float, ...]]  # metric name -> vector over systems

    def __post_init__(self) -> None:
        if len(set(self.systems)) != len(self.systems):
            raise ValueError("system ids must be unique")
        if len(self.systems) < 2:
            raise ValueError("a metric table needs at least 2 systems")
        for name, vector in self.scores.items():
            if len(vector) != len(self.systems):
                raise ValueError(
                    f"metric {name!r} has {len(vector)} scores "
                    f"for {len(self.systems)} systems"
                )

    def metric_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.scores))

    def ranking(self, metric_name: str) -> tuple[str, ...]:
        """System ids best first; ties broken by id for reproducibility."""
        vector = self.scores[metric_name]
        by_system = dict(zip(self.systems, vector))
        return tuple(sorted(self.systems, key=lambda s: (-by_system[s], s)))


@dataclass(frozen=True)
class CorrelationReport:
    """Anchor-vs-other agreement plus the ranking each metric induces."""

    pairs: dict[tuple[str, str], dict[str, float]]
    rankings: dict[str, tuple[str, ...]]


def correlate_metrics(table: MetricTable, anchor: str) -> CorrelationReport:
    """Pearson and Spearman of the anchor metric against every other."""
    if anchor not in table.scores:
        raise ValueError(
            f"anchor {anchor!r} is not among {sorted(table.scores)}"
        )
    anchor_vector = table.scores[anchor]
    pairs: dict[tuple[str, str], dict[str, float]] = {}
    for name in table.metric_names():
        if name == anchor:
            continue
        vector = table.scores[name]
        pairs[(anchor, name)] = {
            "pearson": pearson(anchor_vector, vector),
            "spearman": spearman(anchor_vector, vector),
        }
    rankings = {name: table.ranking(name) for name in table.metric_names()}
    return CorrelationReport(pairs=pairs, rankings=rankings)
