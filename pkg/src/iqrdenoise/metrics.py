"""Mean squared error and peak signal-to-noise ratio between images."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import check_image

__all__ = ["PsnrResult", "psnr"]

PEAK = 255.0


@dataclass(frozen=True)
class PsnrResult:
    """MSE and PSNR in decibels; ``psnr_db`` is ``math.inf`` when MSE is 0."""

    mse: float
    psnr_db: float

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.psnr_db)


def psnr(a, b) -> PsnrResult:
    """PSNR of ``b`` against ``a`` over an 8-bit peak of 255.

    Symmetric in its arguments. Raises ValueError when dimensions differ.
    """
    a = check_image(a)
    b = check_image(b)
    if a.shape != b.shape:
        raise ValueError(f"image dimensions differ: {a.shape} vs {b.shape}")
    diff = a.astype(np.int64) - b.astype(np.int64)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return PsnrResult(mse=0.0, psnr_db=math.inf)
    return PsnrResult(mse=mse, psnr_db=10.0 * math.log10(PEAK * PEAK / mse))
