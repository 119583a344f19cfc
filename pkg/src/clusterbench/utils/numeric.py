from typing import Sequence, Tuple

import numpy as np

__all__ = [
    "sample_std",
    "spread",
]


def sample_std(values: Sequence[float]) -> float:
    """
    The sample standard deviation (divisor n-1) of `values`. A single value
    (or none at all) has a spread of 0.0 rather than NaN.
    """
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1))


def spread(values: Sequence[float]) -> Tuple[float, float, float, float]:
    """
    Summarizes repeated-run values the way the comparison table does.

    :param values: One value per run (at least one).
    :return: `(minimum, maximum, mean, sample_std)`
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("spread() needs at least one value.")
    lowest, highest = float(values.min()), float(values.max())
    # Rounding in the mean must not push it outside [lowest, highest]
    mean = min(max(float(values.mean()), lowest), highest)
    return lowest, highest, mean, sample_std(values)
