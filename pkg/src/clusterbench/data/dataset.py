"""
Benchmark datasets: delimited-file loading, the Artset1 generator, and the
per-dimension bounds that confine the centroid search.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Hashable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..utils.exceptions import ConfigError, DatasetError

__all__ = [
    "DataPoint",
    "Dataset",
    "DatasetSchema",
    "load_delimited",
    "write_delimited",
    "generate_artset1",
    "ARTSET1_RANGES",
    "ARTSET1_POINTS_PER_CLASS",
]

LOG = logging.getLogger("clusterbench")

WHITESPACE = "whitespace"

# One uniform distribution per class; all three coordinates share the range.
ARTSET1_RANGES = ((85.0, 100.0), (70.0, 85.0), (55.0, 70.0), (40.0, 55.0), (25.0, 40.0))
ARTSET1_POINTS_PER_CLASS = 50
ARTSET1_DIM = 3


@dataclass(frozen=True)
class DataPoint:
    """One object o_i: an m-dimensional feature vector plus its (optional) class."""
    values: Tuple[float, ...]
    label: Optional[Hashable] = None


@dataclass(frozen=True)
class DatasetSchema:
    """
    Tells `load_delimited()` how to read a file.

    :param delimiter: "," (or any other single character), or "whitespace"
        for runs of blanks/tabs.

    :param label_column: 0-based index of the class-label column (negative
        counts from the end), or None if the file carries no labels.

    :param num_classes: The K to cluster with. Required when the file is
        unlabeled; otherwise defaults to the number of distinct labels.

    :param name: Name given to the loaded dataset (defaults to the file stem).
    """
    delimiter: str = ","
    label_column: Optional[int] = -1
    num_classes: Optional[int] = None
    name: Optional[str] = None

    def __post_init__(self):
        if not self.delimiter:
            raise ConfigError("A dataset schema needs a delimiter (',' or 'whitespace').")
        if self.num_classes is not None and self.num_classes < 1:
            raise ConfigError(f"num_classes must be at least 1, not {self.num_classes}.")

    @property
    def separator(self) -> str:
        """The separator as pandas wants it."""
        if self.delimiter.casefold() == WHITESPACE or self.delimiter.isspace():
            return r"\s+"
        return self.delimiter


class Dataset:
    """
    The objects O = {o_1 .. o_n} to be clustered. Immutable once built (the
    arrays are flagged read-only), so one instance can be shared by any
    number of concurrent runs.

    Class labels ride along for the F-measure only; the clustering
    algorithms look at `features` and `num_classes`, never at `labels`.
    """

    def __init__(self, name: str, features, labels=None, num_classes: Optional[int] = None) -> None:
        features = np.array(features, dtype=float)
        if features.ndim == 1:
            features = features.reshape(-1, 1)
        if features.ndim != 2 or features.shape[0] == 0 or features.shape[1] == 0:
            raise DatasetError(f"Dataset {name!r} needs a non-empty 2-D feature table, got shape {features.shape}.")
        if not np.all(np.isfinite(features)):
            row = int(np.argwhere(~np.isfinite(features))[0][0]) + 1
            raise DatasetError(f"Dataset {name!r} contains NaN or infinite values.", row=row)

        if labels is not None:
            labels = np.array(labels, dtype=object)
            if labels.shape != (features.shape[0],):
                raise DatasetError(f"Dataset {name!r} has {features.shape[0]} points but {labels.size} labels.")
            labels.setflags(write=False)
            if num_classes is None:
                num_classes = len(set(labels.tolist()))
        if num_classes is None:
            raise DatasetError(f"Dataset {name!r} is unlabeled, so num_classes must be given.")
        if not 1 <= num_classes <= features.shape[0]:
            raise DatasetError(f"Dataset {name!r} needs 1 <= num_classes <= n, got num_classes={num_classes}, n={features.shape[0]}.")

        features.setflags(write=False)
        self._name = name
        self._features = features
        self._labels = labels
        self._num_classes = int(num_classes)
        self._lower = features.min(axis=0)
        self._upper = features.max(axis=0)
        self._lower.setflags(write=False)
        self._upper.setflags(write=False)

    @classmethod
    def from_arrays(cls, name: str, features, labels=None, num_classes: Optional[int] = None) -> "Dataset":
        return cls(name, features, labels=labels, num_classes=num_classes)

    @property
    def name(self) -> str:
        return self._name

    @property
    def features(self) -> np.ndarray:
        """The (n, m) feature table (read-only)."""
        return self._features

    @property
    def labels(self) -> Optional[np.ndarray]:
        return self._labels

    @property
    def n(self) -> int:
        return self._features.shape[0]

    @property
    def dim(self) -> int:
        return self._features.shape[1]

    @property
    def num_classes(self) -> int:
        return self._num_classes

    @property
    def lower_bounds(self) -> np.ndarray:
        return self._lower

    @property
    def upper_bounds(self) -> np.ndarray:
        return self._upper

    @property
    def bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        return self._lower, self._upper

    @property
    def points(self) -> Iterator[DataPoint]:
        for i, row in enumerate(self._features):
            label = None if self._labels is None else self._labels[i]
            yield DataPoint(tuple(float(v) for v in row), label)

    @property
    def shape(self) -> Tuple[int, int, int]:
        """(attributes, classes, instances), the way the dataset table lists them."""
        return self.dim, self.num_classes, self.n

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Dataset(name={self._name!r}, n={self.n}, dim={self.dim}, num_classes={self._num_classes})"


# ############################################################################
#                                                              DELIMITED FILES
# ############################################################################

def load_delimited(path: Union[str, Path], schema: DatasetSchema = None) -> Dataset:
    """
    Loads a dataset from a delimited text file, one object per line.

    Missing values are not imputed: an empty or non-numeric feature cell is
    an error, as is a row with a different number of columns than the rest.

    :param path: The file to read.

    :param schema: Which column holds the label and how columns are separated.
        Defaults to comma-separated with the label in the last column.

    :raises DatasetError: naming the row (1-based) and column (1-based) of the
        first problem found.
    """
    schema = schema or DatasetSchema()
    path = Path(path)
    if not path.is_file():
        raise DatasetError("Cannot read the dataset file (it does not exist or is not a file).", path)
    try:
        frame = pd.read_csv(
            path, sep=schema.separator, header=None, dtype=str, engine="python",
            keep_default_na=False, skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError as e:
        raise DatasetError("The dataset file is empty.", path) from e
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        row = int(match.group(1)) if match else None
        raise DatasetError(f"Ragged row (column count differs from the first row): {e}", path, row=row) from e
    except (OSError, UnicodeDecodeError) as e:
        raise DatasetError(f"Cannot read the dataset file: {e}", path) from e

    if frame.empty:
        raise DatasetError("The dataset file is empty.", path)
    short_rows = frame.isna().any(axis=1).to_numpy()
    if short_rows.any():
        row = int(np.argmax(short_rows))
        raise DatasetError(
            f"Ragged row: {int(frame.iloc[row].notna().sum())} columns where the first row has {frame.shape[1]}.",
            path, row=row + 1)

    column_count = frame.shape[1]
    label_column = None
    if schema.label_column is not None:
        if not -column_count <= schema.label_column < column_count:
            raise DatasetError(f"Label column {schema.label_column} does not exist (the file has {column_count} columns).", path)
        label_column = schema.label_column % column_count
    feature_columns = [c for c in range(column_count) if c != label_column]
    if not feature_columns:
        raise DatasetError("The file has no feature columns.", path)

    features = np.empty((frame.shape[0], len(feature_columns)), dtype=float)
    for d, column in enumerate(feature_columns):
        cells = frame[column].str.strip()
        values = pd.to_numeric(cells, errors="coerce").to_numpy(dtype=float)
        bad = ~np.isfinite(values)
        if bad.any():
            row = int(np.argmax(bad))
            raise DatasetError(f"Missing or non-numeric feature cell {cells.iloc[row]!r}.", path, row=row + 1, column=column + 1)
        features[:, d] = values

    labels = None
    if label_column is not None:
        labels = frame[label_column].str.strip().to_numpy(dtype=object)
    name = schema.name or path.stem
    dataset = Dataset(name, features, labels=labels, num_classes=schema.num_classes)
    LOG.debug(f"Loaded {dataset!r} from {path}")
    return dataset


def write_delimited(dataset: Dataset, path: Union[str, Path], delimiter: str = ",") -> Path:
    """
    Writes the dataset back out as a delimited file: the feature columns,
    then (if the dataset is labeled) the label column. Floats are written at
    full precision so `load_delimited()` reproduces the same values.
    """
    path = Path(path)
    frame = pd.DataFrame(dataset.features)
    if dataset.labels is not None:
        frame[dataset.dim] = dataset.labels
    sep = " " if delimiter.casefold() == WHITESPACE else delimiter
    try:
        frame.to_csv(path, sep=sep, header=False, index=False)
    except OSError as e:
        raise DatasetError(f"Cannot write the dataset file: {e}", path) from e
    return path


# ############################################################################
#                                                            ARTSET1 GENERATOR
# ############################################################################

def generate_artset1(seed: int, ranges: Sequence[Tuple[float, float]] = ARTSET1_RANGES,
                     points_per_class: int = ARTSET1_POINTS_PER_CLASS, name: str = "artset1") -> Dataset:
    """
    Synthesizes the artificial Artset1 dataset: 250 points in 3 dimensions,
    50 per class, each coordinate of a class-c point drawn uniformly from
    the open interval `ranges[c]`. Points are labeled 0..4 by generating
    class. The same seed always gives the same dataset.
    """
    rng = np.random.default_rng(seed)
    blocks = []
    labels = []
    for label, (low, high) in enumerate(ranges):
        block = rng.uniform(low, high, size=(points_per_class, ARTSET1_DIM))
        # uniform() is half-open; keep every coordinate strictly inside
        on_edge = block <= low
        while on_edge.any():
            block[on_edge] = rng.uniform(low, high, size=int(on_edge.sum()))
            on_edge = block <= low
        blocks.append(block)
        labels.extend([label] * points_per_class)
    return Dataset(name, np.vstack(blocks), labels=labels, num_classes=len(ranges))
