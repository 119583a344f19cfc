"""
Experiment configuration: the comparison's control parameters (max
generation 2000, 20 flowers, limit 2, switch probability 0.8), overridden
by a YAML config file, overridden in turn by command-line flags.

Example config file::

    manifest: manifest.yaml
    datasets: [artset1, iris, wine]
    algorithms: [kmeans, fpa, fpakm]
    runs: 10
    seed: 42
    max_iter: 2000
    format: csv
    out: results/report.csv
"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import yaml

from ..clustering.fpa import FpaConfig
from ..clustering.fpakm import FpakmConfig
from ..clustering.kmeans import KMeansConfig
from ..clustering.levy import LevyParams
from ..utils.enums import enum_by_value, enum_choices
from ..utils.exceptions import ConfigError, ConfigSettingWarning
from ..utils.strings import split_names

__all__ = [
    "Algorithm",
    "ReportFormat",
    "ExperimentConfig",
    "published_config",
    "load_experiment_config",
    "CONFIG_KEYS",
]

LOG = logging.getLogger("clusterbench")


class Algorithm(Enum):
    KMEANS = "kmeans"
    FPA = "fpa"
    FPAKM = "fpakm"

    def description(self) -> str:
        return {"kmeans": "K-Means", "fpa": "FPA", "fpakm": "FPAKM"}[self.value]

    @property
    def order(self) -> int:
        return list(Algorithm).index(self)


class ReportFormat(Enum):
    TABLE = "table"
    CSV = "csv"
    JSON_LINES = "json-lines"

    @property
    def extension(self) -> str:
        return {"table": ".txt", "csv": ".csv", "json-lines": ".jsonl"}[self.value]


def published_config() -> FpakmConfig:
    """The control parameters of the published comparison."""
    return FpakmConfig(fpa=FpaConfig(num_flowers=20, switch_p=0.8, max_iter=2000), limit=2)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    :param datasets: Names (as in the manifest), in report order.
    :param algorithms: Which of K-Means, FPA, FPAKM to run.
    :param runs: Repetitions per (dataset, algorithm); run r uses seed base_seed + r.
    :param hybrid: FPA/FPAKM settings (FPA ignores the limit-related fields).
    :param kmeans: Settings of the standalone K-Means baseline.
    :param workers: Worker processes for the (dataset x algorithm x run) grid.
    """
    datasets: Tuple[str, ...] = ()
    algorithms: Tuple[Algorithm, ...] = tuple(Algorithm)
    runs: int = 10
    base_seed: int = 0
    hybrid: FpakmConfig = field(default_factory=published_config)
    kmeans: KMeansConfig = field(default_factory=KMeansConfig)
    workers: int = 1
    manifest: Optional[Path] = None
    report_format: ReportFormat = ReportFormat.TABLE
    out: Optional[Path] = None

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError(f"runs must be at least 1, not {self.runs}.")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, not {self.workers}.")
        if not self.algorithms:
            raise ConfigError("At least one algorithm must be selected.")

    def seed_for(self, run: int) -> int:
        return self.base_seed + run


# ############################################################################
#                                                                      LOADING
# ############################################################################

CONFIG_KEYS = {
    "manifest": Path,
    "datasets": list,
    "algorithms": list,
    "runs": int,
    "seed": int,
    "workers": int,
    "max_iter": int,
    "num_flowers": int,
    "switch_p": float,
    "limit": float,
    "levy_scale": float,
    "levy_lambda": float,
    "clamp": bool,
    "local_search_iters": int,
    "greedy_local_search": bool,
    "reset_trial_after_local_search": bool,
    "kmeans_max_iters": int,
    "kmeans_tol": float,
    "format": str,
    "out": Path,
}


def _coerce(key: str, value: Any) -> Any:
    kind = CONFIG_KEYS[key]
    try:
        if kind is list:
            return split_names(value)
        if kind is bool:
            if isinstance(value, bool):
                return value
            text = str(value).strip().casefold()
            if text in ("1", "true", "yes", "on"):
                return True
            if text in ("0", "false", "no", "off"):
                return False
            raise ValueError(value)
        if kind is int and isinstance(value, float) and not value.is_integer():
            raise ValueError(value)
        if kind is float and str(value).strip().casefold() in ("inf", "infinity", "none", "never"):
            return float("inf")
        return kind(value)
    except (TypeError, ValueError) as e:
        raise ConfigSettingWarning(key, value) from e


def _read_config_file(path: Path) -> Dict[str, Any]:
    try:
        with path.open("rt", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read the config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"The config file {path} is not valid YAML: {e}") from e
    if not isinstance(raw, Mapping):
        raise ConfigError(f"The config file {path} must hold a mapping of settings.")
    settings = dict(raw)
    for key in ("manifest", "out"):
        if settings.get(key) is not None and not Path(settings[key]).is_absolute():
            settings[key] = path.parent / settings[key]
    return settings


def _resolve_enum(enum_class, key: str, value: str):
    element = enum_by_value(enum_class, value)
    if element is None:
        raise ConfigSettingWarning(key, value, possible_values=enum_choices(enum_class))
    return element


def load_experiment_config(path: Union[str, Path, None] = None, overrides: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    """
    Builds an `ExperimentConfig` from the defaults, then the config file at
    `path` (if any), then `overrides` (entries whose value is None are
    ignored, so unset command-line flags do not clobber the file).

    :raises ConfigError: for unknown keys, or values that are unusable.
    """
    settings: Dict[str, Any] = {}
    if path is not None:
        settings.update(_read_config_file(Path(path)))
    settings.update({key: value for key, value in (overrides or {}).items() if value is not None})
    unknown = set(settings) - set(CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"Unknown configuration settings: {sorted(unknown)}. Known settings are: {sorted(CONFIG_KEYS)}")
    s = {key: _coerce(key, value) for key, value in settings.items() if value is not None}

    defaults = published_config()
    fpa = replace(
        defaults.fpa,
        num_flowers=s.get("num_flowers", defaults.fpa.num_flowers),
        switch_p=s.get("switch_p", defaults.fpa.switch_p),
        max_iter=s.get("max_iter", defaults.fpa.max_iter),
        clamp=s.get("clamp", defaults.fpa.clamp),
        levy=LevyParams(lam=s.get("levy_lambda", 1.5), scale=s.get("levy_scale", 0.01)),
    )
    limit = s.get("limit", defaults.limit)
    hybrid = replace(
        defaults,
        fpa=fpa,
        limit=int(limit) if limit != float("inf") else limit,
        local_search_iters=s.get("local_search_iters", defaults.local_search_iters),
        greedy_local_search=s.get("greedy_local_search", defaults.greedy_local_search),
        reset_trial_after_local_search=s.get("reset_trial_after_local_search", defaults.reset_trial_after_local_search),
    )
    kmeans = KMeansConfig(max_iters=s.get("kmeans_max_iters", 100), tol=s.get("kmeans_tol", 1e-6))

    algorithms = tuple(_resolve_enum(Algorithm, "algorithms", name) for name in s.get("algorithms", [])) or tuple(Algorithm)
    report_format = _resolve_enum(ReportFormat, "format", s["format"]) if "format" in s else ReportFormat.TABLE
    config = ExperimentConfig(
        datasets=tuple(s.get("datasets", ())),
        algorithms=tuple(dict.fromkeys(algorithms)),
        runs=s.get("runs", 10),
        base_seed=s.get("seed", 0),
        hybrid=hybrid,
        kmeans=kmeans,
        workers=s.get("workers", 1),
        manifest=s.get("manifest"),
        report_format=report_format,
        out=s.get("out"),
    )
    LOG.debug(f"Experiment config: {config}")
    return config
