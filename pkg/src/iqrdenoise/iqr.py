"""Interquartile-range outlier filter with local-averaging repair.

Detection partitions the image into non-overlapping k x k tiles anchored at
(0, 0); right and bottom edge tiles are clipped. Within a tile, a pixel is a
suspect when it lies strictly outside [Q1, Q3] of the tile's sample, and is
flagged noisy when its distance to the nearer quartile reaches the side's
threshold (t1 left of Q1, t2 right of Q3).

Repair replaces each flagged pixel with the rounded mean of its unflagged
8-neighbors. The first pass reads the original image for every flagged pixel
at once; pixels whose neighbors are all flagged are deferred to later passes,
which treat previously repaired pixels as clean sources. If a pass makes no
progress the configured fallback value is written to everything left.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .image import check_image, neighbors8
from .stats import median_of, quartiles

__all__ = [
    "MIDGRAY",
    "FALLBACKS",
    "PixelClass",
    "classify_position",
    "detect_tile",
    "detect",
    "estimate_pixel",
    "repair",
    "denoise_iqr",
    "IqrDenoiser",
]

MIDGRAY = 128
FALLBACKS = ("cleanmedian", "midgray")

DEFAULT_WINDOW = 8
DEFAULT_T1 = 30.0
DEFAULT_T2 = 30.0


class PixelClass(Enum):
    """Position of a pixel within the image frame."""

    CORNER = "corner"
    BORDER = "border"
    INTERIOR = "interior"


def _check_window(window: int) -> None:
    if int(window) != window or window < 2:
        raise ValueError(f"window must be an integer >= 2, got {window!r}")


def _check_thresholds(t1: float, t2: float) -> None:
    if t1 < 0 or t2 < 0:
        raise ValueError(f"thresholds must be nonnegative, got t1={t1}, t2={t2}")


def _check_fallback(fallback: str) -> None:
    if fallback not in FALLBACKS:
        raise ValueError(f"fallback must be one of {FALLBACKS}, got {fallback!r}")


def classify_position(img, coord) -> PixelClass:
    """Corner, border, or interior position of ``coord`` in ``img``.

    Corner when both coordinates are extremal, border when exactly one is,
    interior otherwise. Requires width and height of at least 2; degenerate
    images have no well-defined classes.
    """
    h, w = np.asarray(img).shape[:2]
    if h < 2 or w < 2:
        raise ValueError(f"position classes are undefined for degenerate {h}x{w} images")
    r, c = coord
    if not (0 <= r < h and 0 <= c < w):
        raise IndexError(f"coordinate {coord!r} out of bounds for {h}x{w} image")
    row_edge = r in (0, h - 1)
    col_edge = c in (0, w - 1)
    if row_edge and col_edge:
        return PixelClass.CORNER
    if row_edge or col_edge:
        return PixelClass.BORDER
    return PixelClass.INTERIOR


def _flag_values(values: np.ndarray, t1: float, t2: float) -> np.ndarray:
    """Boolean flags for one tile's sample, per the two-sided permission test."""
    q = quartiles(values)
    low = (values < q.q1) & (q.q1 - values >= t1)
    high = (values > q.q3) & (values - q.q3 >= t2)
    return low | high


def detect_tile(pixels: Iterable[tuple[tuple[int, int], int]], *,
                t1: float = DEFAULT_T1, t2: float = DEFAULT_T2) -> set[tuple[int, int]]:
    """Flag the noisy pixels of one tile given as ((row, col), value) pairs.

    A pixel is flagged when it is strictly outside [Q1, Q3] of the tile's
    values and at distance >= t1 (below Q1) or >= t2 (above Q3) from the
    nearer quartile. Raises ValueError on an empty tile.
    """
    _check_thresholds(t1, t2)
    items = list(pixels)
    if not items:
        raise ValueError("detect_tile: tile is empty")
    values = np.array([v for _, v in items], dtype=np.float64)
    flags = _flag_values(values, t1, t2)
    return {coord for (coord, _), hit in zip(items, flags) if hit}


def detect(img, *, window: int = DEFAULT_WINDOW,
           t1: float = DEFAULT_T1, t2: float = DEFAULT_T2) -> np.ndarray:
    """Boolean noise mask over the whole image, tile by tile.

    Tiles are non-overlapping ``window`` x ``window`` blocks anchored at the
    top-left corner; edge tiles are clipped and use their clipped sample size.
    """
    img = check_image(img)
    _check_window(window)
    _check_thresholds(t1, t2)
    h, w = img.shape
    mask = np.zeros((h, w), dtype=bool)
    for r0 in range(0, h, window):
        for c0 in range(0, w, window):
            tile = img[r0 : r0 + window, c0 : c0 + window].astype(np.float64)
            mask[r0 : r0 + window, c0 : c0 + window] = _flag_values(
                tile.ravel(), t1, t2
            ).reshape(tile.shape)
    return mask


def estimate_pixel(img, mask, coord) -> int | None:
    """Local-averaging estimate for the flagged pixel at ``coord``.

    Averages the 8-neighborhood values whose mask entry is clean, rounding
    half away from zero. Returns None (deferred) when every neighbor is
    flagged. Raises ValueError if ``coord`` itself is not flagged.
    """
    img = check_image(img)
    mask = _check_mask(img, mask)
    r, c = coord
    if not mask[r, c]:
        raise ValueError(f"estimate_pixel: pixel {coord!r} is not flagged")
    total = 0
    count = 0
    for rr, cc in neighbors8(img, coord):
        if not mask[rr, cc]:
            total += int(img[rr, cc])
            count += 1
    if count == 0:
        return None
    return math.floor(total / count + 0.5)


def _check_mask(img: np.ndarray, mask) -> np.ndarray:
    mask = np.asarray(mask)
    if mask.shape != img.shape:
        raise ValueError(
            f"mask dimensions {mask.shape} do not match image {img.shape}"
        )
    return mask.astype(bool)


def _neighbor_estimates(img: np.ndarray, usable: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-pixel rounded mean over usable 8-neighbors, and where any exist.

    Padding contributes nothing, so image borders see only in-bounds
    neighbors. Sums stay below 2**11 and counts below 9, so float64 keeps the
    half-away-from-zero rounding exact.
    """
    h, w = img.shape
    vals = np.zeros((h + 2, w + 2), dtype=np.float64)
    cnt = np.zeros((h + 2, w + 2), dtype=np.float64)
    vals[1:-1, 1:-1] = np.where(usable, img, 0)
    cnt[1:-1, 1:-1] = usable
    total = np.zeros((h, w), dtype=np.float64)
    n = np.zeros((h, w), dtype=np.float64)
    for dr in (0, 1, 2):
        for dc in (0, 1, 2):
            if dr == 1 and dc == 1:
                continue
            total += vals[dr : dr + h, dc : dc + w]
            n += cnt[dr : dr + h, dc : dc + w]
    have = n > 0
    mean = np.divide(total, n, out=np.zeros_like(total), where=have)
    return np.floor(mean + 0.5).astype(np.uint8), have


def _fallback_value(img: np.ndarray, mask: np.ndarray, fallback: str) -> int:
    if fallback == "midgray":
        return MIDGRAY
    clean = img[~mask]
    if clean.size == 0:
        return MIDGRAY
    return median_of(clean)


def repair(img, mask, *, fallback: str = "cleanmedian") -> np.ndarray:
    """Repair every flagged pixel by iterative noise-excluding averaging.

    Each pass estimates all still-flagged pixels simultaneously from the
    current output, excluding still-flagged neighbors; resolved pixels become
    clean sources for the next pass. A pass that resolves nothing writes the
    fallback value (128 for ``midgray``, the median of never-flagged pixels
    for ``cleanmedian``, 128 when none exist) to all remaining pixels.
    Unflagged pixels are returned bit-identical.
    """
    img = check_image(img)
    mask = _check_mask(img, mask)
    _check_fallback(fallback)
    out = img.copy()
    pending = mask.copy()
    while pending.any():
        est, have = _neighbor_estimates(out, ~pending)
        solvable = pending & have
        if not solvable.any():
            out[pending] = _fallback_value(img, mask, fallback)
            break
        out[solvable] = est[solvable]
        pending &= ~solvable
    return out


def denoise_iqr(img, *, window: int = DEFAULT_WINDOW, t1: float = DEFAULT_T1,
                t2: float = DEFAULT_T2, fallback: str = "cleanmedian") -> np.ndarray:
    """Detect and repair impulse noise in one pass over the image.

    Pure function of its inputs: identical arguments produce bit-identical
    output. Requires width and height of at least 2.
    """
    img = check_image(img)
    _check_window(window)
    _check_thresholds(t1, t2)
    _check_fallback(fallback)
    h, w = img.shape
    if h < 2 or w < 2:
        raise ValueError(f"denoise_iqr requires at least a 2x2 image, got {h}x{w}")
    mask = detect(img, window=window, t1=t1, t2=t2)
    return repair(img, mask, fallback=fallback)


class IqrDenoiser(BaseEstimator, TransformerMixin):
    """Stateless transformer applying the IQR outlier filter to one image.

    Parameters
    ----------
    window : int, default=8
        Tile side length; tiles at the right/bottom edges are clipped.
    t1, t2 : float, default=30.0
        Permission thresholds left of Q1 and right of Q3, in intensity
        levels.
    fallback : {"cleanmedian", "midgray"}, default="cleanmedian"
        Value written to pixels whose whole neighborhood stays flagged.
    """

    def __init__(self, window: int = DEFAULT_WINDOW, t1: float = DEFAULT_T1,
                 t2: float = DEFAULT_T2, fallback: str = "cleanmedian"):
        self.window = window
        self.t1 = t1
        self.t2 = t2
        self.fallback = fallback

    def fit(self, X=None, y=None):
        """No-op apart from parameter validation; the filter learns nothing."""
        _check_window(self.window)
        _check_thresholds(self.t1, self.t2)
        _check_fallback(self.fallback)
        return self

    def transform(self, X) -> np.ndarray:
        """Denoise a single 2-d grayscale image."""
        return denoise_iqr(X, window=self.window, t1=self.t1, t2=self.t2,
                           fallback=self.fallback)
