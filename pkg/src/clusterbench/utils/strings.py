import re
from typing import Iterable, List, Union

__all__ = [
    "normalize_name",
    "dataset_key",
    "split_names",
]


def normalize_name(name, separator="_") -> str:
    """
    Normalizes a name by replacing all non-alphanumeric characters with
    underscores (or whatever separator you specify).
    """
    return re.sub("[^A-Za-z0-9_]+", separator, name)


def dataset_key(name: str) -> str:
    """
    The lookup key for a dataset name: normalized, lower case, with no
    leading/trailing underscores. "Crude Oil", "crude-oil" and "CRUDE_OIL"
    all become "crude_oil".
    """
    return normalize_name(name.strip()).strip("_").casefold()


def split_names(names: Union[str, Iterable[str], None]) -> List[str]:
    """
    Splits a comma-separated list (as given on the command line) into its
    parts. A list is passed through (stripped). Empty parts are dropped.
    """
    if names is None:
        return []
    if isinstance(names, str):
        names = names.split(",")
    return [str(name).strip() for name in names if str(name).strip()]
