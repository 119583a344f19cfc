"""
Runs the (dataset x algorithm x run) grid and aggregates each
(dataset, algorithm) cell into best/worst/average/std statistics of the
final objective and F-measure.

Run r of every algorithm uses seed `base_seed + r`, so any single run can be
reproduced on its own. Results are ordered by (dataset order, algorithm
order, run), never by completion order.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from ..clustering.evaluation import score_assignment
from ..clustering.fpa import fpa_run
from ..clustering.fpakm import fpakm_run
from ..clustering.kmeans import kmeans_run
from ..clustering.objective import assign
from ..data.dataset import Dataset
from ..data.manifest import Manifest
from ..utils.exceptions import ConfigError
from ..utils.numeric import spread
from .config import Algorithm, ExperimentConfig

__all__ = [
    "RunRecord",
    "RunStats",
    "ExperimentResult",
    "run_single",
    "aggregate",
    "run_experiment",
]

LOG = logging.getLogger("clusterbench")


@dataclass(frozen=True)
class RunRecord:
    """One line of the per-run log."""
    dataset: str
    algorithm: Algorithm
    run: int
    seed: int
    # None: the run failed, or (f_measure) the dataset has no labels
    objective: Optional[float] = None
    f_measure: Optional[float] = None
    iterations: int = 0
    wall_time: float = field(default=0.0, compare=False)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class RunStats:
    """
    The statistics row of one (dataset, algorithm) cell. The objective
    statistics are None when every run failed, the F-measure ones also when
    the dataset has no labels.
    """
    dataset: str
    algorithm: Algorithm
    runs: int
    best: Optional[float]
    worst: Optional[float]
    average: Optional[float]
    std: Optional[float]
    f_min: Optional[float]
    f_max: Optional[float]
    f_avg: Optional[float]
    f_std: Optional[float]
    failures: int = 0
    wall_times: Tuple[float, ...] = field(default=(), compare=False)


@dataclass
class ExperimentResult:
    stats: List[RunStats]
    records: List[RunRecord]

    @property
    def failures(self) -> List[RunRecord]:
        return [record for record in self.records if not record.ok]

    def cell(self, dataset: str, algorithm: Algorithm) -> RunStats:
        for stats in self.stats:
            if stats.dataset == dataset and stats.algorithm == algorithm:
                return stats
        raise KeyError((dataset, algorithm))


# ############################################################################
#                                                                  SINGLE RUNS
# ############################################################################

def run_single(data: Dataset, algorithm: Algorithm, run: int, cfg: ExperimentConfig) -> RunRecord:
    """
    Runs one algorithm once and scores its final solution. An exception
    inside the run is captured in the record rather than raised.
    """
    seed = cfg.seed_for(run)
    k = data.num_classes
    started = time.perf_counter()
    try:
        if algorithm is Algorithm.KMEANS:
            outcome = kmeans_run(data, k, cfg=replace(cfg.kmeans, rng_seed=seed))
            solution, iterations = outcome.solution, outcome.iterations
        elif algorithm is Algorithm.FPA:
            outcome = fpa_run(data, k, replace(cfg.hybrid.fpa, rng_seed=seed))
            solution, iterations = outcome.best, outcome.iterations
        else:
            outcome = fpakm_run(data, k, replace(cfg.hybrid, fpa=replace(cfg.hybrid.fpa, rng_seed=seed)))
            solution, iterations = outcome.best, outcome.iterations
        f_value = score_assignment(data.labels, assign(data, solution)) if data.labels is not None else None
        record = RunRecord(data.name, algorithm, run, seed, solution.objective, f_value, iterations,
                           time.perf_counter() - started)
    except Exception as e:  # noqa
        LOG.error(f"{algorithm.description()} run {run} (seed {seed}) on {data.name} failed: {e!r}")
        record = RunRecord(data.name, algorithm, run, seed, wall_time=time.perf_counter() - started, error=repr(e))
    LOG.debug(f"{data.name} / {algorithm.description()} / run {run}: objective {record.objective}, F {record.f_measure}")
    return record


def _run_cell(args) -> RunRecord:
    return run_single(*args)


def aggregate(records: List[RunRecord]) -> RunStats:
    """Best/worst/average/sample-std of the successful runs of one cell."""
    first = records[0]
    ok = [record for record in records if record.ok]
    if ok:
        best, worst, average, std = spread([record.objective for record in ok])
        scored = [record.f_measure for record in ok if record.f_measure is not None]
        f_min, f_max, f_avg, f_std = spread(scored) if scored else (None,) * 4
    else:
        best = worst = average = std = f_min = f_max = f_avg = f_std = None
    return RunStats(first.dataset, first.algorithm, len(ok), best, worst, average, std,
                    f_min, f_max, f_avg, f_std, failures=len(records) - len(ok),
                    wall_times=tuple(record.wall_time for record in records))


def run_experiment(cfg: ExperimentConfig, manifest: Manifest) -> ExperimentResult:
    """
    Loads every dataset named in `cfg` (aborting on the first one that is
    missing or malformed), runs the grid, and aggregates it.

    :raises ConfigError: if a dataset is not in the manifest.
    :raises DatasetError: if a dataset cannot be loaded or has the wrong shape.
    """
    if not cfg.datasets:
        raise ConfigError("No datasets were selected.")
    missing = [name for name in cfg.datasets if name not in manifest]
    if missing:
        raise ConfigError(f"Datasets not in the manifest: {missing}. The manifest lists: {manifest.names}")
    datasets: Dict[str, Dataset] = {}
    for name in cfg.datasets:
        datasets[name] = manifest.load(name)
        LOG.info(f"Loaded {datasets[name]!r}")

    algorithms = sorted(cfg.algorithms, key=lambda a: a.order)
    tasks = [(datasets[name], algorithm, run, cfg)
             for name in cfg.datasets for algorithm in algorithms for run in range(cfg.runs)]
    LOG.info(f"Running {len(tasks)} runs ({len(cfg.datasets)} datasets x {len(algorithms)} algorithms x {cfg.runs} runs)")
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(_run_cell, tasks))
    else:
        records = [_run_cell(task) for task in tasks]

    dataset_order = {datasets[name].name: i for i, name in enumerate(cfg.datasets)}
    records.sort(key=lambda r: (dataset_order[r.dataset], r.algorithm.order, r.run))
    stats = []
    for name in cfg.datasets:
        for algorithm in algorithms:
            cell = [r for r in records if r.dataset == datasets[name].name and r.algorithm is algorithm]
            stats.append(aggregate(cell))
            LOG.info(f"{name} / {algorithm.description()}: best {stats[-1].best}, average {stats[-1].average}")
    return ExperimentResult(stats, records)
