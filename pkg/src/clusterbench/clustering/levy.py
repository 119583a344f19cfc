"""
Lévy-flight step sizes for global pollination, drawn with Mantegna's
algorithm: L = scale * u / |v|^(1/lambda), u ~ N(0, sigma_u^2), v ~ N(0, 1).
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gamma

from ..utils.exceptions import ConfigError

__all__ = [
    "LevyParams",
    "mantegna_sigma",
    "levy_sample",
]


@dataclass(frozen=True)
class LevyParams:
    """
    :param lam: Stability exponent, 1 < lam <= 2 (3/2 by default).
    :param scale: Multiplier applied to the raw deviates (0.01 by default;
        unit-scale Lévy steps are far too long for bounded centroid spaces).
    """
    lam: float = 1.5
    scale: float = 0.01

    def __post_init__(self):
        if not 1.0 < self.lam <= 2.0:
            raise ConfigError(f"The Lévy exponent must lie in (1, 2], not {self.lam}.")
        if not self.scale > 0:
            raise ConfigError(f"The Lévy scale must be positive, not {self.scale}.")


@lru_cache(maxsize=None)
def mantegna_sigma(lam: float) -> float:
    """sigma_u = [G(1+l) sin(pi l/2) / (G((1+l)/2) l 2^((l-1)/2))]^(1/l)"""
    numerator = gamma(1 + lam) * math.sin(math.pi * lam / 2)
    denominator = gamma((1 + lam) / 2) * lam * 2 ** ((lam - 1) / 2)
    return float((numerator / denominator) ** (1 / lam))


def levy_sample(params: LevyParams, dims: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draws `dims` independent, symmetric, heavy-tailed step sizes. The
    magnitude density falls off as s^-(1+lam).

    Consumes exactly 2*dims normal deviates from `rng` (all of u, then all of v).
    """
    if dims < 1:
        raise ValueError(f"levy_sample() needs dims >= 1, not {dims}.")
    u = rng.normal(0.0, mantegna_sigma(params.lam), size=dims)
    v = rng.normal(0.0, 1.0, size=dims)
    return params.scale * u / np.abs(v) ** (1 / params.lam)
