"""Order statistics over pixel windows: quartiles, IQR, and medians."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["Quartiles", "quartiles", "median_of"]


@dataclass(frozen=True)
class Quartiles:
    """First and third quartiles of a sample, with their spread."""

    q1: float
    q3: float
    iqr: float


def _at_rank(s: np.ndarray, rank: float) -> float:
    # 1-based fractional rank, clamped so n <= 2 still yields a value
    rank = min(max(rank, 1.0), float(s.size))
    lo = math.floor(rank)
    frac = rank - lo
    if frac == 0.0:
        return float(s[lo - 1])
    return float(s[lo - 1] + frac * (s[lo] - s[lo - 1]))


def quartiles(data) -> Quartiles:
    """Quartiles at 1-based ranks (n+1)/4 and 3(n+1)/4 of the sorted sample.

    Fractional ranks interpolate linearly between the two adjacent order
    statistics. Values are kept real-valued; callers compare against them
    without rounding.

    Raises ValueError on empty data.
    """
    s = np.sort(np.asarray(data, dtype=np.float64).ravel())
    n = s.size
    if n == 0:
        raise ValueError("quartiles: data is empty")
    q1 = _at_rank(s, (n + 1) / 4.0)
    q3 = _at_rank(s, 3.0 * (n + 1) / 4.0)
    return Quartiles(q1=q1, q3=q3, iqr=q3 - q1)


def median_of(data) -> int:
    """Median as an integer intensity.

    Odd-length samples take the middle order statistic; even-length samples
    take the mean of the two middle order statistics rounded to the nearest
    integer with ties rounding half up.

    Raises ValueError on empty data.
    """
    s = np.sort(np.asarray(data).ravel())
    n = s.size
    if n == 0:
        raise ValueError("median_of: data is empty")
    if n % 2:
        return int(s[n // 2])
    mid = (int(s[n // 2 - 1]) + int(s[n // 2])) / 2.0
    return math.floor(mid + 0.5)
