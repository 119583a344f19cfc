"""
Lloyd-style K-Means: the standalone baseline, and the local-search step
FPAKM falls back on.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Union

import numpy as np

from ..data.dataset import Dataset
from ..utils.exceptions import ConfigError, DimensionError
from .objective import Assignment, CentroidSolution, assign, evaluate, recompute_centroids, sse

__all__ = [
    "KMeansConfig",
    "KMeansResult",
    "forgy_init",
    "kmeans_run",
    "RANDOM_INIT",
]

LOG = logging.getLogger("clusterbench")

RANDOM_INIT = "random"


@dataclass(frozen=True)
class KMeansConfig:
    """
    :param max_iters: Upper bound on Lloyd iterations (at least 1).
    :param tol: Stop once no centroid moves farther than this (feature units).
    :param rng_seed: Seed for the random (Forgy) initialization.
    """
    max_iters: int = 100
    tol: float = 1e-6
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_iters < 1:
            raise ConfigError(f"max_iters must be at least 1, not {self.max_iters}.")
        if self.tol < 0:
            raise ConfigError(f"tol must not be negative, not {self.tol}.")


@dataclass
class KMeansResult:
    solution: CentroidSolution
    assignment: Assignment
    iterations: int
    # index 0 is the initial solution, then one entry per iteration
    objective_history: List[float] = field(default_factory=list)
    sse_history: List[float] = field(default_factory=list)

    @property
    def objective(self) -> float:
        return self.solution.objective


def forgy_init(data: Dataset, k: int, rng: np.random.Generator) -> CentroidSolution:
    """K distinct data points, sampled uniformly without replacement."""
    if k > data.n:
        raise DimensionError(f"Cannot pick {k} centroids from only {data.n} objects.")
    rows = rng.choice(data.n, size=k, replace=False)
    return CentroidSolution(data.features[rows])


def kmeans_run(data: Dataset, k: int, init: Union[CentroidSolution, str] = RANDOM_INIT,
               cfg: KMeansConfig = None) -> KMeansResult:
    """
    Alternates `assign()` and `recompute_centroids()` until the largest
    centroid displacement is within `cfg.tol`, or `cfg.max_iters` passes
    have been made.

    :param init: A starting `CentroidSolution`, or "random" for Forgy
        initialization seeded with `cfg.rng_seed`.
    :return: The last iterate. Each pass never raises the sum of squared
        distances (`sse_history`), but the distance-sum objective can go
        up, so `result.objective` may exceed the starting objective.

    :raises DimensionError: if K > n, or the starting centroids do not fit.
    """
    cfg = cfg or KMeansConfig()
    if k > data.n:
        raise DimensionError(f"Cannot form {k} clusters from only {data.n} objects.")
    if isinstance(init, str):
        if init != RANDOM_INIT:
            raise ConfigError(f"Unknown K-Means initialization {init!r} (use {RANDOM_INIT!r} or a CentroidSolution).")
        current = forgy_init(data, k, np.random.default_rng(cfg.rng_seed))
    else:
        if init.k != k or init.dim != data.dim:
            raise DimensionError(f"Initial centroids of shape ({init.k}, {init.dim}) do not fit K={k} on {data.dim}-dimensional data.")
        current = init.copy()

    result = KMeansResult(current, assign(data, current), 0,
                          objective_history=[evaluate(data, current)], sse_history=[sse(data, current)])
    for iteration in range(1, cfg.max_iters + 1):
        updated = recompute_centroids(data, result.assignment, k)
        shift = float(np.max(np.sqrt(np.sum((updated.centroids - current.centroids) ** 2, axis=1))))
        current = updated
        result.solution = current
        result.assignment = assign(data, current)
        result.iterations = iteration
        result.objective_history.append(evaluate(data, current))
        result.sse_history.append(sse(data, current))
        if shift <= cfg.tol:
            break
    LOG.debug(f"K-Means on {data.name}: {result.iterations} iterations, objective {result.objective:.6f}")
    return result
