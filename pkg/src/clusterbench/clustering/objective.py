"""
The clustering objective shared by K-Means, FPA and FPAKM: Euclidean
distance, nearest-centroid assignment, centroid recomputation, and the
objective itself -- the sum over all objects of the (plain, not squared)
Euclidean distance to the nearest centroid.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..data.dataset import Dataset
from ..utils.exceptions import DimensionError

__all__ = [
    "CentroidSolution",
    "Assignment",
    "euclidean",
    "distance_matrix",
    "assign",
    "evaluate",
    "sse",
    "recompute_centroids",
    "lloyd_step",
]

LOG = logging.getLogger("clusterbench")


class CentroidSolution:
    """
    A candidate solution: K centroids of m dimensions each (equivalently, a
    flat vector of K*m reals).

    This is a value type. The centroid array handed out is read-only; assign
    a new array to `centroids` to change it, which also clears the cached
    objective.
    """
    __slots__ = ("_centroids", "_objective")

    def __init__(self, centroids) -> None:
        self._objective: Optional[float] = None
        self._centroids = None
        self.centroids = centroids

    @property
    def centroids(self) -> np.ndarray:
        return self._centroids

    @centroids.setter
    def centroids(self, value) -> None:
        array = np.array(value, dtype=float)
        if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
            raise DimensionError(f"Centroids must form a non-empty (K, m) table, got shape {array.shape}.")
        if not np.all(np.isfinite(array)):
            raise DimensionError("Centroids must not contain NaN or infinite values.")
        array.setflags(write=False)
        self._centroids = array
        self._objective = None

    @property
    def objective(self) -> Optional[float]:
        """The cached objective value, or None if not evaluated since the last change."""
        return self._objective

    @property
    def k(self) -> int:
        return self._centroids.shape[0]

    @property
    def dim(self) -> int:
        return self._centroids.shape[1]

    @property
    def vector(self) -> np.ndarray:
        """The flat K*m encoding (a fresh, writable copy)."""
        return self._centroids.flatten()

    @classmethod
    def from_vector(cls, vector, k: int) -> "CentroidSolution":
        vector = np.asarray(vector, dtype=float)
        if vector.ndim != 1 or k < 1 or vector.size % k:
            raise DimensionError(f"A flat vector of length {vector.size} cannot hold {k} centroids.")
        return cls(vector.reshape(k, -1))

    def evaluate(self, data: Dataset) -> float:
        """Evaluates (and caches) the objective on `data`."""
        return evaluate(data, self)

    def copy(self) -> "CentroidSolution":
        # the array is read-only, so sharing it between copies is safe
        twin = CentroidSolution.__new__(CentroidSolution)
        twin._centroids = self._centroids
        twin._objective = self._objective
        return twin

    def __repr__(self) -> str:
        return f"CentroidSolution(k={self.k}, dim={self.dim}, objective={self._objective})"


@dataclass(frozen=True, eq=False)
class Assignment:
    """Cluster membership: `memberships[i]` is the cluster (0..k-1) of object i."""
    memberships: np.ndarray
    k: int

    def __post_init__(self):
        memberships = np.array(self.memberships, dtype=np.intp)
        if memberships.ndim != 1:
            raise DimensionError("Memberships must be a flat list of cluster indices.")
        if memberships.size and (memberships.min() < 0 or memberships.max() >= self.k):
            raise DimensionError(f"Cluster indices must lie in [0, {self.k}).")
        memberships.setflags(write=False)
        object.__setattr__(self, "memberships", memberships)

    @property
    def n(self) -> int:
        return self.memberships.size

    def cluster_sizes(self) -> np.ndarray:
        return np.bincount(self.memberships, minlength=self.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Assignment):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.memberships, other.memberships)


CentroidsLike = Union[CentroidSolution, np.ndarray]


def _centroid_array(data: Dataset, centroids: CentroidsLike) -> np.ndarray:
    array = centroids.centroids if isinstance(centroids, CentroidSolution) else np.asarray(centroids, dtype=float)
    if array.ndim != 2 or array.shape[1] != data.dim:
        raise DimensionError(f"Centroids of shape {array.shape} do not fit {data.dim}-dimensional data.")
    return array


# ############################################################################
#                                                                     DISTANCE
# ############################################################################

def euclidean(a, b) -> float:
    """
    The Euclidean distance sqrt(sum_d (a_d - b_d)^2).

    :raises DimensionError: if the vectors differ in length.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"Cannot measure the distance between vectors of shapes {a.shape} and {b.shape}.")
    return float(np.sqrt(np.sum((a - b) ** 2)))


def _squared_distances(data: Dataset, centroids: CentroidsLike) -> np.ndarray:
    array = _centroid_array(data, centroids)
    diff = data.features[:, np.newaxis, :] - array[np.newaxis, :, :]
    return np.sum(diff ** 2, axis=-1)


def distance_matrix(data: Dataset, centroids: CentroidsLike) -> np.ndarray:
    """The (n, K) matrix of distances from every object to every centroid."""
    return np.sqrt(_squared_distances(data, centroids))


# ############################################################################
#                                                         ASSIGNMENT/OBJECTIVE
# ############################################################################

def assign(data: Dataset, centroids: CentroidsLike) -> Assignment:
    """
    Maps every object to its nearest centroid. Ties go to the lowest
    cluster index.
    """
    distances = distance_matrix(data, centroids)
    # argmin returns the first minimum, which is the tie-break we want
    return Assignment(np.argmin(distances, axis=1), distances.shape[1])


def evaluate(data: Dataset, centroids: CentroidsLike) -> float:
    """
    The objective: sum over all objects of the Euclidean distance to the
    nearest centroid. Caches the value on a `CentroidSolution`.
    """
    value = float(np.sum(np.min(distance_matrix(data, centroids), axis=1)))
    if isinstance(centroids, CentroidSolution):
        centroids._objective = value
    return value


def sse(data: Dataset, centroids: CentroidsLike) -> float:
    """Within-cluster sum of squared distances to the nearest centroid."""
    return float(np.sum(np.min(_squared_distances(data, centroids), axis=1)))


def recompute_centroids(data: Dataset, assignment: Assignment, k: Optional[int] = None) -> CentroidSolution:
    """
    Moves each centroid to the mean of its members.

    A cluster left without members is re-seeded at the object lying
    farthest from its own (recomputed) centroid, so K stays fixed. With
    several empty clusters, each takes the next-farthest object.
    """
    k = assignment.k if k is None else k
    if assignment.n != data.n:
        raise DimensionError(f"The assignment covers {assignment.n} objects but the dataset has {data.n}.")
    memberships = assignment.memberships
    features = data.features
    counts = np.bincount(memberships, minlength=k)
    sums = np.zeros((k, data.dim))
    np.add.at(sums, memberships, features)
    centroids = np.zeros((k, data.dim))
    filled = counts > 0
    centroids[filled] = sums[filled] / counts[filled, np.newaxis]

    empty = np.flatnonzero(~filled)
    if empty.size:
        spread = np.sqrt(np.sum((features - centroids[memberships]) ** 2, axis=1))
        for j in empty:
            farthest = int(np.argmax(spread))
            centroids[j] = features[farthest]
            spread[farthest] = -1.0
            LOG.debug(f"Cluster {j} was empty; re-seeded at object {farthest}")
    return CentroidSolution(centroids)


def lloyd_step(data: Dataset, solution: CentroidsLike) -> CentroidSolution:
    """One K-Means pass (assign, then recompute), with the result evaluated."""
    array = _centroid_array(data, solution)
    updated = recompute_centroids(data, assign(data, array), array.shape[0])
    evaluate(data, updated)
    return updated
