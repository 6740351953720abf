"""Feature-weight training via logistic regression.

A labeled corpus of candidates (keyphrase or not) is turned into a
feature matrix, a logistic model is fit with batch gradient descent, and
the learned coefficients are clamped to be non-negative and normalized to
sum to one so they can serve directly as scoring weights.
"""

import logging

import numpy as np

from .extract import (
    DocumentStats,
    WeightVector,
    compute_features,
    filter_syntactic,
    generate_candidates,
)
from .morph import AnnotatedSentence

logger = logging.getLogger(__name__)

NUM_FEATURES = 8


def sigmoid(z: np.ndarray) -> np.ndarray:
    """Numerically stable logistic function."""
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    expz = np.exp(z[~pos])
    out[~pos] = expz / (1.0 + expz)
    return out


def logistic_loss(w: np.ndarray, X: np.ndarray, y: np.ndarray) -> float:
    """Mean negative log-likelihood, computed without overflow.

    Uses log(1 + exp(-m)) = logaddexp(0, -m) with margin m = (2y - 1) X w.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    margins = (2.0 * y - 1.0) * (X @ w)
    return float(np.mean(np.logaddexp(0.0, -margins)))


def logistic_gradient(w: np.ndarray, X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Gradient of ``logistic_loss`` with respect to ``w``."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    return X.T @ (sigmoid(X @ w) - y) / len(y)


def gradient_descent(
    X: np.ndarray,
    y: np.ndarray,
    epochs: int = 200,
    learning_rate: float = 0.1,
    initial: np.ndarray | None = None,
) -> tuple[np.ndarray, list[float]]:
    """Full-batch gradient descent; returns final weights and the loss trace.

    The trace has ``epochs + 1`` entries, the first being the loss at the
    initial point.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"X must be 2-dimensional, got shape {X.shape}")
    if len(X) != len(y):
        raise ValueError(f"X and y disagree on sample count: {len(X)} vs {len(y)}")
    if epochs < 0:
        raise ValueError(f"epochs must be >= 0, got {epochs}")
    if learning_rate <= 0:
        raise ValueError(f"learning rate must be positive, got {learning_rate}")
    if initial is None:
        w = np.full(X.shape[1], 1.0 / X.shape[1])
    else:
        w = np.asarray(initial, dtype=float).copy()
        if w.shape != (X.shape[1],):
            raise ValueError(f"initial weights shape {w.shape} does not match X")
    losses = [logistic_loss(w, X, y)]
    for _ in range(epochs):
        w = w - learning_rate * logistic_gradient(w, X, y)
        losses.append(logistic_loss(w, X, y))
    return w, losses


def build_training_matrix(
    labeled_docs: list[tuple[list[AnnotatedSentence], set[tuple[str, ...]]]],
) -> tuple[np.ndarray, np.ndarray]:
    """Feature matrix and labels from annotated documents and gold lemma sets.

    Every candidate that passes the syntactic filter becomes one row; its
    label is 1 when its lemma sequence appears in the document's gold set.
    """
    rows: list[tuple[float, ...]] = []
    labels: list[float] = []
    for doc, gold in labeled_docs:
        stats = DocumentStats.from_document(doc)
        for cand in generate_candidates(doc):
            if not filter_syntactic(cand):
                continue
            rows.append(compute_features(cand, doc, stats).as_tuple())
            labels.append(1.0 if cand.lemma_seq in gold else 0.0)
    if not rows:
        raise ValueError("no filtered candidates in the training corpus")
    return np.array(rows, dtype=float), np.array(labels, dtype=float)


def train_weights(
    labeled_docs: list[tuple[list[AnnotatedSentence], set[tuple[str, ...]]]],
    epochs: int = 200,
    learning_rate: float = 0.1,
) -> tuple[WeightVector, list[float]]:
    """Fit scoring weights on labeled documents.

    The fitted coefficients are clamped at zero and normalized to sum to
    one. A corpus whose labels are all identical cannot rank features, so
    it yields uniform weights with a warning.
    """
    X, y = build_training_matrix(labeled_docs)
    if y.min() == y.max():
        logger.warning(
            "training labels are all %d; falling back to uniform weights", int(y[0])
        )
        return WeightVector.uniform(), []
    w, losses = gradient_descent(X, y, epochs=epochs, learning_rate=learning_rate)
    clamped = np.clip(w, 0.0, None)
    total = clamped.sum()
    if total <= 0:
        logger.warning("all fitted weights were non-positive; using uniform weights")
        return WeightVector.uniform(), losses
    return WeightVector.from_sequence(clamped / total), losses
