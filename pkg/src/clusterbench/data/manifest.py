"""
The dataset manifest: a small YAML file mapping dataset names to files (or
to the Artset1 generator) and to the shape each dataset is expected to have.

Example::

    datasets:
      artset1:
        generator: artset1
        seed: 1
      iris:
        path: uci/iris.data
        delimiter: ","
        label_column: 4
      crude oil:
        path: /home/me/data/crude_oil.txt
        delimiter: whitespace
        label_column: 0
        expected: {attributes: 5, classes: 3, instances: 56}
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

import yaml

from ..utils.exceptions import ConfigError, ConfigSettingWarning, DatasetError
from ..utils.strings import dataset_key
from .dataset import Dataset, DatasetSchema, generate_artset1, load_delimited

__all__ = [
    "REFERENCE_SHAPES",
    "REFERENCE_ORDER",
    "Shape",
    "ManifestEntry",
    "Manifest",
    "load_manifest",
    "validate_shape",
]

LOG = logging.getLogger("clusterbench")

# (attributes, classes, instances) of the eight benchmark datasets
Shape = Tuple[int, int, int]
REFERENCE_SHAPES: Dict[str, Shape] = {
    "artset1": (3, 5, 250),
    "iris": (4, 3, 150),
    "wine": (13, 3, 178),
    "glass": (9, 6, 214),
    "cancer": (9, 2, 683),
    "thyroid": (5, 3, 215),
    "cmc": (9, 3, 1473),
    "crude_oil": (5, 3, 56),
}
REFERENCE_ORDER: List[str] = list(REFERENCE_SHAPES)

GENERATORS = ("artset1",)
ENTRY_KEYS = {"path", "delimiter", "label_column", "num_classes", "expected", "generator", "seed"}


def validate_shape(dataset: Dataset, expected: Optional[Shape], name: Optional[str] = None) -> None:
    """
    Checks a loaded dataset against its expected (attributes, classes,
    instances) triple.

    :raises DatasetError: naming the dataset and every field that differs.
    """
    if expected is None:
        return
    name = name or dataset.name
    problems = [
        f"{field_name} = {actual} (expected {wanted})"
        for field_name, actual, wanted in zip(("attributes", "classes", "instances"), dataset.shape, expected)
        if actual != wanted
    ]
    if problems:
        raise DatasetError(f"Dataset {name!r} does not have the expected shape: {', '.join(problems)}.")


@dataclass(frozen=True)
class ManifestEntry:
    """
    Where one dataset comes from.

    Either `path` (plus the schema) or `generator` (plus `seed`) is set.
    `expected` defaults to the reference shape for the well-known names.
    """
    name: str
    path: Optional[Path] = None
    schema: DatasetSchema = field(default_factory=DatasetSchema)
    generator: Optional[str] = None
    seed: int = 1
    expected: Optional[Shape] = None

    @property
    def key(self) -> str:
        return dataset_key(self.name)

    def load(self) -> Dataset:
        """Loads (or generates) the dataset and checks its shape."""
        if self.generator == "artset1":
            dataset = generate_artset1(self.seed, name=self.name)
        else:
            dataset = load_delimited(self.path, self.schema)
        validate_shape(dataset, self.expected, self.name)
        return dataset


class Manifest:
    """An ordered, name-normalized collection of `ManifestEntry`s."""

    def __init__(self, entries: List[ManifestEntry], source: Optional[Path] = None) -> None:
        self._entries: Dict[str, ManifestEntry] = {}
        self.source = source
        for entry in entries:
            if entry.key in self._entries:
                raise ConfigError(f"Dataset {entry.name!r} is listed twice in the manifest.")
            self._entries[entry.key] = entry

    @property
    def names(self) -> List[str]:
        return [entry.name for entry in self._entries.values()]

    def __contains__(self, name: str) -> bool:
        return dataset_key(name) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, name: str) -> ManifestEntry:
        try:
            return self._entries[dataset_key(name)]
        except KeyError:
            raise ConfigSettingWarning("dataset", name, context="the dataset list", possible_values=self.names) from None

    def load(self, name: str) -> Dataset:
        return self.entry(name).load()


# ############################################################################
#                                                                      PARSING
# ############################################################################

def _parse_expected(name: str, raw) -> Shape:
    if isinstance(raw, Mapping):
        try:
            return int(raw["attributes"]), int(raw["classes"]), int(raw["instances"])
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigSettingWarning("expected", raw, context=f"manifest entry {name!r}",
                                       possible_values="{attributes, classes, instances}") from e
    try:
        attributes, classes, instances = (int(v) for v in raw)
    except (TypeError, ValueError) as e:
        raise ConfigSettingWarning("expected", raw, context=f"manifest entry {name!r}") from e
    return attributes, classes, instances


def _parse_entry(name: str, raw, base_dir: Path) -> ManifestEntry:
    if not isinstance(raw, Mapping):
        raise ConfigError(f"Manifest entry {name!r} must be a mapping, not {type(raw).__name__}.")
    unknown = set(raw) - ENTRY_KEYS
    if unknown:
        raise ConfigError(f"Manifest entry {name!r} has unknown keys: {sorted(unknown)}.")

    expected = raw.get("expected")
    expected = _parse_expected(name, expected) if expected is not None else REFERENCE_SHAPES.get(dataset_key(name))

    generator = raw.get("generator")
    if generator is not None:
        if generator not in GENERATORS:
            raise ConfigSettingWarning("generator", generator, context=f"manifest entry {name!r}", possible_values=GENERATORS)
        try:
            seed = int(raw.get("seed", 1))
        except (TypeError, ValueError) as e:
            raise ConfigSettingWarning("seed", raw.get("seed"), context=f"manifest entry {name!r}") from e
        return ManifestEntry(name=name, generator=generator, seed=seed, expected=expected)

    if "path" not in raw:
        raise ConfigError(f"Manifest entry {name!r} needs either a path or a generator.")
    path = Path(raw["path"]).expanduser()
    if not path.is_absolute():
        path = base_dir / path
    label_column = raw.get("label_column", -1)
    num_classes = raw.get("num_classes")
    try:
        schema = DatasetSchema(
            delimiter=str(raw.get("delimiter", ",")),
            label_column=None if label_column is None else int(label_column),
            num_classes=None if num_classes is None else int(num_classes),
            name=name,
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Manifest entry {name!r} has an invalid schema: {e}") from e
    return ManifestEntry(name=name, path=path, schema=schema, expected=expected)


def load_manifest(source: Union[str, Path, Mapping]) -> Manifest:
    """
    Reads a manifest file (or an already-parsed mapping, in which case
    relative paths resolve against the current directory).

    :raises ConfigError: if the file cannot be read or is malformed.
    """
    if isinstance(source, Mapping):
        raw, base_dir, origin = source, Path.cwd(), None
    else:
        origin = Path(source)
        try:
            with origin.open("rt", encoding="utf-8") as f:
                raw = yaml.safe_load(f)
        except OSError as e:
            raise ConfigError(f"Cannot read the dataset manifest {origin}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"The dataset manifest {origin} is not valid YAML: {e}") from e
        base_dir = origin.parent

    if not isinstance(raw, Mapping) or not isinstance(raw.get("datasets"), Mapping):
        raise ConfigError("A dataset manifest needs a top-level 'datasets' mapping.")
    entries = [_parse_entry(str(name), entry, base_dir) for name, entry in raw["datasets"].items()]
    LOG.debug(f"Manifest lists {len(entries)} datasets")
    return Manifest(entries, source=origin)
