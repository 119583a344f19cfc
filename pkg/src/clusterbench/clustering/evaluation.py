"""
External cluster validity: precision, recall and F-measure of every
(class, cluster) pair, and the class-size-weighted total F-measure.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..utils.exceptions import DimensionError
from .objective import Assignment

__all__ = [
    "ContingencyTable",
    "build_contingency",
    "precision_recall_f",
    "f_measure",
    "score_assignment",
]


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """
    `counts[i, j]` is the number of members of class i that landed in
    cluster j. Classes are ordered by sorted label value (`classes`).
    """
    counts: np.ndarray
    classes: Tuple = ()

    def __post_init__(self):
        counts = np.array(self.counts, dtype=np.int64)
        if counts.ndim != 2:
            raise DimensionError(f"A contingency table is 2-D, got shape {counts.shape}.")
        if np.any(counts < 0):
            raise ValueError("Contingency counts must not be negative.")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def class_sizes(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def cluster_sizes(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def build_contingency(labels: Sequence, assignment: Assignment, k: Optional[int] = None) -> ContingencyTable:
    """
    Cross-tabulates true classes against clusters. Every cluster 0..k-1 gets
    a column, including empty ones.

    :raises DimensionError: if there are not as many labels as memberships.
    """
    memberships = assignment.memberships if isinstance(assignment, Assignment) else np.asarray(assignment, dtype=np.intp)
    k = k if k is not None else (assignment.k if isinstance(assignment, Assignment) else int(memberships.max()) + 1)
    labels = np.asarray(labels, dtype=object)
    if labels.shape != memberships.shape:
        raise DimensionError(f"{labels.size} labels cannot be matched with {memberships.size} memberships.")
    classes, class_index = np.unique(labels.astype(str) if labels.size else labels, return_inverse=True)
    counts = np.zeros((len(classes), k), dtype=np.int64)
    np.add.at(counts, (class_index.reshape(-1), memberships), 1)
    return ContingencyTable(counts, tuple(classes.tolist()))


def precision_recall_f(table: ContingencyTable) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    P(i, j) = b_ij / b_j, R(i, j) = b_ij / b_i, F(i, j) = 2PR / (P + R).
    Undefined cells (empty cluster, P + R = 0) are 0.
    """
    counts = table.counts.astype(float)
    class_sizes = counts.sum(axis=1, keepdims=True)
    cluster_sizes = counts.sum(axis=0, keepdims=True)
    precision = np.divide(counts, cluster_sizes, out=np.zeros_like(counts), where=cluster_sizes > 0)
    recall = np.divide(counts, class_sizes, out=np.zeros_like(counts), where=class_sizes > 0)
    total = precision + recall
    f = np.divide(2 * precision * recall, total, out=np.zeros_like(counts), where=total > 0)
    return precision, recall, f


def f_measure(table: ContingencyTable) -> float:
    """
    F_tot = sum_i (b_i / n) * max_j F(i, j), in [0, 1]; 1 means every class
    is exactly one cluster.
    """
    n = table.n
    if n < 1:
        raise ValueError("The F-measure needs at least one object.")
    _, _, f = precision_recall_f(table)
    weights = table.class_sizes / n
    return float(min(np.sum(weights * f.max(axis=1)), 1.0))


def score_assignment(labels: Sequence, assignment: Assignment) -> float:
    """The F-measure of `assignment` against the true `labels`."""
    return f_measure(build_contingency(labels, assignment))
