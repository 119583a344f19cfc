import logging
from typing import Optional

__all__ = [
    "log_uncaught",
    "ClusterBenchError",
    "DatasetError",
    "DimensionError",
    "ConfigError",
    "ValueInterpretationWarning",
    "ConfigSettingWarning",
    "EX_OK",
    "EX_VALIDATION",
    "EX_ERROR",
    "EX_USAGE",
]

UNCAUGHT_MESSAGE = "Uncaught error detected. There is no good reason why the following error wasn't handled earlier."
EX_OK = 0
EX_VALIDATION = 1  # a dataset, manifest or config failed validation
EX_ERROR = 2  # at least one run (or the harness itself) failed
EX_USAGE = 64  # The command was used incorrectly (bad arguments, bad flag, etc.)


# ############################################################################
#                                                           EXCEPTION HANDLING
# ############################################################################

def log_uncaught(exception: Optional[Exception] = None, log: logging.Logger = None) -> int:
    """
    Wrap the entire command in a `try/except` block and call this function in
    the `except` clause, passing in the offending Exception.

    :param exception: The otherwise uncaught exception.

    :param log: The Logger to use. If not specified, then the root logger
    will be used.

    :return: A suggested exit code. If the exception has an `exitcode`
    attribute (see `ClusterBenchError`), then that code is returned;
    otherwise, `EX_ERROR` (2) is returned -- or in the case that `exception`
    is None (somehow), then `EX_OK` (0) is returned.
    """
    if not log:
        log = logging.getLogger()
    exitcode = EX_OK
    if exception:
        exitcode = EX_ERROR
        if hasattr(exception, "exitcode"):
            exitcode = exception.exitcode
        if isinstance(exception, ClusterBenchError):
            # Expected failure modes get a one-line message, not a traceback
            log.error(str(exception))
        else:
            log.error(UNCAUGHT_MESSAGE)
            log.exception(exception)
    return exitcode


# ############################################################################
#                                                            CUSTOM EXCEPTIONS
# ############################################################################

class ClusterBenchError(Exception):
    """
    Base class of the errors raised by this package.

    TIP: In your try/except code, catch the specific subclass when you can.
    The CLI catches this base class and turns `exitcode` into the process
    exit status.

    :param args: A payload for the exception, as usual (typically a str
    with an explanation of the error).
    """
    exitcode = EX_ERROR

    def __init__(self, *args) -> None:
        super().__init__(*args)


class DatasetError(ClusterBenchError):
    """
    Exception raised because a dataset file could not be read, or because
    its contents (or shape) are not what they need to be.

    :param msg: An explanation of the problem.

    :param path: (optional) The offending file.

    :param row: (optional) 1-based row number within the file.

    :param column: (optional) 1-based column number within the row.
    """
    exitcode = EX_VALIDATION

    def __init__(self, msg: str, path=None, row: Optional[int] = None, column: Optional[int] = None) -> None:
        self.path = path
        self.row = row
        self.column = column
        location = []
        if path is not None:
            location.append(str(path))
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            msg = f"{', '.join(location)}: {msg}"
        super().__init__(msg)


class DimensionError(ClusterBenchError, ValueError):
    """
    Exception raised because two vectors (or a centroid set and a dataset)
    do not have compatible shapes.
    """


class ConfigError(ClusterBenchError):
    """
    Exception raised because of a problem processing configuration data
    (an experiment config file, a dataset manifest, or a parameter that is
    out of range).
    """
    exitcode = EX_VALIDATION


class ValueInterpretationWarning(ConfigError, Warning):
    """
    Raised because of a value that could not be converted to an
    expected type.

    :param key: The name of the field.

    :param attempted_value: The value that is in error.

    :param args: Any additional payload for the exception, e.g. another
    instance of `Exception`).

    :param context: (optional) a description of the context (the data source, row number, etc.).

    :param possible_values: (optional) a list of valid choices.

    :param loglevel: (optional) How this error should appear in the log (if no
    outer code catches it and handles it, that is). The default is `logging.WARNING`.
    """

    def __init__(self, key, attempted_value, *args, context=None, possible_values=None, loglevel=logging.WARNING):
        msg = ""
        if context:
            msg += f"In {context}, "
        msg += f"{key} = {attempted_value!r} is invalid."
        if possible_values:
            msg += f" Possible values are: {possible_values}"
        self.key = key
        self.attempted_value = attempted_value
        self.loglevel = loglevel
        super().__init__(msg, *args)


class ConfigSettingWarning(ValueInterpretationWarning):
    """
    Raised because of a bad setting in a config file (or on the command line).

    :param context: (optional) Defaults to "a configuration setting".
    """
    def __init__(self, key, attempted_value, *args, context="a configuration setting", possible_values=None, loglevel=logging.WARNING):
        super().__init__(key, attempted_value, *args, context=context, possible_values=possible_values, loglevel=loglevel)
