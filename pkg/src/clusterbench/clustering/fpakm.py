"""
FPAKM: Flower Pollination with a K-Means fallback.

A single stagnation counter `trial` counts the sweeps in a row in which g*
did not improve. While trial < limit, sweeps are ordinary FPA pollination
sweeps. Once it reaches the limit, the next sweep instead takes every
flower as the seed of a K-Means local search (assign, recompute centroids).
The K-Means branch draws nothing from the rng.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Union

import numpy as np

from ..data.dataset import Dataset
from ..utils.exceptions import ConfigError
from .fpa import FpaConfig, FpaResult, Population, init_population, pollination_sweep
from .objective import lloyd_step

__all__ = [
    "FpakmConfig",
    "FpakmResult",
    "local_search_sweep",
    "fpakm_run",
    "STAGNATION_EPSILON",
]

LOG = logging.getLogger("clusterbench")

# g* counts as unchanged unless it drops by more than this
STAGNATION_EPSILON = 1e-12


@dataclass(frozen=True)
class FpakmConfig:
    """
    :param fpa: The pollination settings.
    :param limit: Stagnant sweeps tolerated before K-Means takes over
        (`math.inf` disables the K-Means branch).
    :param local_search_iters: Lloyd passes per flower in a local-search sweep.
    :param greedy_local_search: Keep a K-Means result only if it does not
        worsen the flower. Off by default: the result always replaces the
        flower, even when the distance-sum objective goes up.
    :param reset_trial_after_local_search: Restart the stagnation count
        after every local-search sweep. Off by default: trial only resets
        when g* improves, so every later sweep stays a local-search sweep
        until it does.
    """
    fpa: FpaConfig = field(default_factory=FpaConfig)
    limit: Union[int, float] = 2
    local_search_iters: int = 1
    greedy_local_search: bool = False
    reset_trial_after_local_search: bool = False

    def __post_init__(self):
        if not self.limit >= 1:
            raise ConfigError(f"limit must be at least 1, not {self.limit}.")
        if isinstance(self.limit, float) and not (self.limit.is_integer() or math.isinf(self.limit)):
            raise ConfigError(f"limit must be a whole number (or infinity), not {self.limit}.")
        if self.local_search_iters < 1:
            raise ConfigError(f"local_search_iters must be at least 1, not {self.local_search_iters}.")


@dataclass
class FpakmResult(FpaResult):
    local_search_moves: int = 0
    local_search_sweeps: int = 0
    # value of trial after each sweep
    trial_history: List[int] = field(default_factory=list)


def local_search_sweep(data: Dataset, population: Population, cfg: FpakmConfig, result: FpakmResult) -> None:
    """Runs every flower through `cfg.local_search_iters` Lloyd passes."""
    for i, flower in enumerate(population.flowers):
        candidate = flower
        for _ in range(cfg.local_search_iters):
            candidate = lloyd_step(data, candidate)
        if not cfg.greedy_local_search or candidate.objective <= flower.objective:
            population.flowers[i] = candidate
            result.local_search_moves += 1
    result.local_search_sweeps += 1


def fpakm_run(data: Dataset, k: int, cfg: FpakmConfig = None) -> FpakmResult:
    """
    Runs FPAKM for `cfg.fpa.max_iter` sweeps.

    With the K-Means branch never firing (limit beyond max_iter), the rng
    stream, the moves and the result are identical to `fpa_run()` with the
    same seed.
    """
    cfg = cfg or FpakmConfig()
    fpa_cfg = cfg.fpa
    rng = np.random.default_rng(fpa_cfg.rng_seed)
    bounds = data.bounds if fpa_cfg.clamp else None
    population = init_population(data, k, fpa_cfg, rng)
    result = FpakmResult(population.best, [], population)
    trial = 0
    for sweep in range(fpa_cfg.max_iter):
        searched = trial >= cfg.limit
        if searched:
            LOG.debug(f"FPAKM on {data.name}: g* stagnant for {trial} sweeps, K-Means local search at sweep {sweep}")
            local_search_sweep(data, population, cfg, result)
        else:
            pollination_sweep(data, population, fpa_cfg, rng, result, bounds)

        previous = population.best_objective
        population.update_best()
        if population.best_objective < previous - STAGNATION_EPSILON:
            trial = 0
        elif searched and cfg.reset_trial_after_local_search:
            trial = 0
        else:
            trial += 1
        result.history.append(population.best_objective)
        result.trial_history.append(trial)
    result.best = population.best
    LOG.debug(f"FPAKM on {data.name}: best objective {population.best_objective:.6f}, "
              f"{result.local_search_sweeps} local-search sweeps")
    return result
