"""
The Flower Pollination Algorithm specialized to centroid-based clustering.

Each flower is a K x m centroid table (a K*m vector). Every iteration, each
flower in turn draws rand ~ U[0, 1): below the switch probability it makes
a global (Lévy-flight) move relative to the best solution g*, otherwise a
local move along the difference of two randomly chosen peers. A move is
kept only if it strictly lowers the flower's objective. g* is refreshed
once per sweep.

rng stream contract (one `numpy.random.Generator` per run, consumed in this
order): the Forgy rows of each flower at initialization; then per flower
per iteration one uniform switch draw, followed by either 2*K*m normals
(global move) or two peer indices and one uniform epsilon (local move).
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..data.dataset import Dataset
from ..utils.exceptions import ConfigError, DimensionError
from .kmeans import forgy_init
from .levy import LevyParams, levy_sample
from .objective import CentroidSolution, evaluate

__all__ = [
    "FpaConfig",
    "Population",
    "FpaResult",
    "init_population",
    "global_pollination",
    "local_pollination",
    "pollination_sweep",
    "fpa_run",
]

LOG = logging.getLogger("clusterbench")

Bounds = Optional[Tuple[np.ndarray, np.ndarray]]
Sampler = Callable[[LevyParams, int, np.random.Generator], np.ndarray]


@dataclass(frozen=True)
class FpaConfig:
    """
    :param num_flowers: Population size N (at least 2).
    :param switch_p: Probability p of a global move (0..1).
    :param max_iter: Number of sweeps over the population.
    :param levy: Lévy step parameters for global moves.
    :param rng_seed: Seed of the run's random stream.
    :param clamp: Keep centroids inside the dataset's per-dimension bounds.
    """
    num_flowers: int = 20
    switch_p: float = 0.8
    max_iter: int = 2000
    levy: LevyParams = field(default_factory=LevyParams)
    rng_seed: int = 0
    clamp: bool = True

    def __post_init__(self):
        if self.num_flowers < 2:
            raise ConfigError(f"num_flowers must be at least 2 (local pollination needs two peers), not {self.num_flowers}.")
        if not 0.0 <= self.switch_p <= 1.0:
            raise ConfigError(f"switch_p must lie in [0, 1], not {self.switch_p}.")
        if self.max_iter < 0:
            raise ConfigError(f"max_iter must not be negative, not {self.max_iter}.")


@dataclass
class Population:
    """The flowers, plus a private copy of the best solution seen so far (g*)."""
    flowers: List[CentroidSolution]
    best: CentroidSolution
    best_objective: float

    @property
    def size(self) -> int:
        return len(self.flowers)

    def fittest(self) -> Tuple[int, float]:
        """Index and objective of the current best flower (first one on ties)."""
        objectives = [flower.objective for flower in self.flowers]
        index = int(np.argmin(objectives))
        return index, objectives[index]

    def update_best(self) -> bool:
        """Adopts the fittest flower as g* if it is strictly better. Returns True if g* changed."""
        index, objective = self.fittest()
        if objective < self.best_objective:
            self.best = self.flowers[index].copy()
            self.best_objective = objective
            return True
        return False


@dataclass
class FpaResult:
    best: CentroidSolution
    # best-so-far objective after each sweep
    history: List[float]
    population: Population
    global_moves: int = 0
    local_moves: int = 0
    accepted_moves: int = 0

    @property
    def objective(self) -> float:
        return self.best.objective

    @property
    def iterations(self) -> int:
        return len(self.history)


def _clip(centroids: np.ndarray, bounds: Bounds) -> np.ndarray:
    if bounds is None:
        return centroids
    lower, upper = bounds
    return np.clip(centroids, lower, upper)


# ############################################################################
#                                                                   POPULATION
# ############################################################################

def init_population(data: Dataset, k: int, cfg: FpaConfig, rng: np.random.Generator = None) -> Population:
    """
    N flowers, each seeded with K distinct data points (independent Forgy
    draws per flower), evaluated, with g* identified.

    :raises DimensionError: if K > n.
    """
    if k > data.n:
        raise DimensionError(f"Cannot form {k} clusters from only {data.n} objects.")
    rng = rng if rng is not None else np.random.default_rng(cfg.rng_seed)
    flowers = [forgy_init(data, k, rng) for _ in range(cfg.num_flowers)]
    for flower in flowers:
        evaluate(data, flower)
    population = Population(flowers, flowers[0].copy(), flowers[0].objective)
    index, objective = population.fittest()
    population.best = flowers[index].copy()
    population.best_objective = objective
    return population


# ############################################################################
#                                                                  POLLINATION
# ############################################################################

def global_pollination(flower: CentroidSolution, best: CentroidSolution, levy: LevyParams,
                       rng: np.random.Generator, bounds: Bounds = None,
                       sampler: Sampler = levy_sample) -> CentroidSolution:
    """
    x' = x + L * (x - g*), with L a fresh vector of K*m Lévy step sizes
    (one per coordinate).
    """
    if flower.centroids.shape != best.centroids.shape:
        raise DimensionError(f"Flower {flower.centroids.shape} and g* {best.centroids.shape} differ in shape.")
    x = flower.vector
    steps = sampler(levy, x.size, rng)
    moved = x + steps * (x - best.vector)
    return CentroidSolution(_clip(moved.reshape(flower.centroids.shape), bounds))


def local_pollination(flower: CentroidSolution, peer_j: CentroidSolution, peer_k: CentroidSolution,
                      rng: np.random.Generator, bounds: Bounds = None,
                      epsilon: Optional[float] = None) -> CentroidSolution:
    """
    x' = x + eps * (x_j - x_k), with one uniform eps in [0, 1) per call.
    """
    shape = flower.centroids.shape
    if peer_j.centroids.shape != shape or peer_k.centroids.shape != shape:
        raise DimensionError("Local pollination needs a flower and two peers of the same shape.")
    if epsilon is None:
        epsilon = rng.random()
    moved = flower.centroids + epsilon * (peer_j.centroids - peer_k.centroids)
    return CentroidSolution(_clip(moved, bounds))


def pollination_sweep(data: Dataset, population: Population, cfg: FpaConfig, rng: np.random.Generator,
                      result: FpaResult, bounds: Bounds = None) -> None:
    """
    One pass over the population (in index order) against the sweep-start
    g*. Moves are accepted greedily (strict improvement only); `result`'s
    move counters are updated in place. g* itself is not touched here.
    """
    best = population.best
    size = population.size
    for i, flower in enumerate(population.flowers):
        if rng.random() < cfg.switch_p:
            candidate = global_pollination(flower, best, cfg.levy, rng, bounds)
            result.global_moves += 1
        else:
            j, k = rng.choice(size, size=2, replace=False)
            candidate = local_pollination(flower, population.flowers[j], population.flowers[k], rng, bounds)
            result.local_moves += 1
        if evaluate(data, candidate) < flower.objective:
            population.flowers[i] = candidate
            result.accepted_moves += 1


def fpa_run(data: Dataset, k: int, cfg: FpaConfig = None) -> FpaResult:
    """
    Runs FPA for `cfg.max_iter` sweeps.

    :return: An `FpaResult` whose `best` is g* after the last sweep and whose
        `history` holds g*'s objective after each sweep (never increasing).
    """
    cfg = cfg or FpaConfig()
    rng = np.random.default_rng(cfg.rng_seed)
    bounds = data.bounds if cfg.clamp else None
    population = init_population(data, k, cfg, rng)
    result = FpaResult(population.best, [], population)
    for _ in range(cfg.max_iter):
        pollination_sweep(data, population, cfg, rng, result, bounds)
        population.update_best()
        result.history.append(population.best_objective)
    result.best = population.best
    LOG.debug(f"FPA on {data.name}: best objective {population.best_objective:.6f} after {cfg.max_iter} sweeps")
    return result
