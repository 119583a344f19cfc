from typing import List, Optional, Type, TypeVar

from .strings import dataset_key

__all__ = [
    'enum_by_value',
    'enum_choices',
    'enum_token',
]

E = TypeVar('E')


def enum_token(text: str) -> str:
    """
    The key that config and command-line tokens are matched on: lower case,
    with every separator dropped. "K-Means", "kmeans" and "K_MEANS" all give
    "kmeans"; "json-lines" and "JSON_LINES" both give "jsonlines".
    """
    return dataset_key(text).replace('_', '')


def _spellings(element) -> List[str]:
    spellings = [element.name]
    if isinstance(element.value, str):
        spellings.append(element.value)
    if hasattr(element, 'description'):
        spellings.append(element.description())
    return spellings


def enum_by_value(enum_class: Type[E], value: str) -> Optional[E]:
    """
    Returns the element of `enum_class` that a user-supplied token names.
    An exact match on the value wins. Otherwise the token is compared (see
    `enum_token()`) against each element's value, its `description()` if the
    class defines one, and its name.

    :param enum_class: The enum type (class). Any subclass of Enum.

    :param value: The value (e.g. a config-file or command-line token) to look up.

    :return: The identified enum element, or None if nothing (or more than
        one element) matches.
    """
    if not value or not isinstance(value, str):
        return None

    for e in enum_class:
        if e.value == value:
            return e

    token = enum_token(value)
    if not token:
        return None
    matches = [e for e in enum_class if any(enum_token(spelling) == token for spelling in _spellings(e))]
    return matches[0] if len(matches) == 1 else None


def enum_choices(enum_class) -> List[str]:
    """The values of `enum_class`, for "possible values" messages."""
    return [e.value if isinstance(e.value, str) else e.name.casefold() for e in enum_class]
