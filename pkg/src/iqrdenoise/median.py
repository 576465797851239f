"""Baseline sliding-window median filter."""

from __future__ import annotations

import numpy as np
from scipy import ndimage
from sklearn.base import BaseEstimator, TransformerMixin

from .image import check_image

__all__ = ["denoise_median", "MedianDenoiser"]


def denoise_median(img, window: int = 3) -> np.ndarray:
    """Median of the centered ``window`` x ``window`` neighborhood per pixel.

    Out-of-bounds samples are supplied by edge replication, so output
    dimensions equal input dimensions. The window must be odd and >= 3.
    """
    img = check_image(img)
    if int(window) != window or window < 3:
        raise ValueError(f"median window must be an integer >= 3, got {window!r}")
    if window % 2 == 0:
        raise ValueError(f"median window must be odd, got {window}")
    return ndimage.median_filter(img, size=window, mode="nearest")


class MedianDenoiser(BaseEstimator, TransformerMixin):
    """Stateless transformer applying the baseline median filter.

    Parameters
    ----------
    window : int, default=3
        Odd side length of the centered neighborhood.
    """

    def __init__(self, window: int = 3):
        self.window = window

    def fit(self, X=None, y=None):
        if int(self.window) != self.window or self.window < 3 or self.window % 2 == 0:
            raise ValueError(f"window must be an odd integer >= 3, got {self.window!r}")
        return self

    def transform(self, X) -> np.ndarray:
        return denoise_median(X, window=self.window)
