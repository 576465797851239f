"""Synthetic test images for self-contained benchmark runs.

Defaults are calibrated so the shipped step/checker/gradient trio exhibits
the qualitative window-size trends of natural photographs at 10% impulse
noise: pure flat patterns carry no fine structure for a median filter to
degrade, so the step edge is rendered along a slightly oblique boundary and
the gradient with ordered dithering.
"""

from __future__ import annotations

import numpy as np

__all__ = ["flat", "step_edge", "checkerboard", "gradient", "PATTERNS", "make_pattern"]

# 4x4 Bayer ordered-dither matrix
_BAYER4 = np.array([
    [0, 8, 2, 10],
    [12, 4, 14, 6],
    [3, 11, 1, 9],
    [15, 7, 13, 5],
])


def flat(width: int, height: int, value: int = 128) -> np.ndarray:
    """Constant field."""
    _check_dims(width, height)
    return np.full((height, width), value, dtype=np.uint8)


def step_edge(width: int, height: int, low: int = 40, high: int = 216,
              run: int = 4) -> np.ndarray:
    """Two flat regions split by a step edge through the image center.

    With ``run > 0`` the boundary is oblique, drifting one column toward the
    left every ``run`` rows (a staircase, as a shallow non-axis-aligned edge
    rasterizes). ``run = 0`` gives a perfectly vertical edge.
    """
    _check_dims(width, height)
    if run < 0:
        raise ValueError(f"run must be >= 0, got {run}")
    c = np.arange(width)[None, :]
    if run == 0:
        boundary = np.full((height, 1), width // 2)
    else:
        r = np.arange(height)[:, None]
        boundary = width // 2 + height // (2 * run) - r // run
    return np.where(c >= boundary, high, low).astype(np.uint8)


def checkerboard(width: int, height: int, cell: int = 2,
                 low: int = 64, high: int = 192) -> np.ndarray:
    """Alternating ``cell`` x ``cell`` squares of two intensities."""
    _check_dims(width, height)
    if cell < 1:
        raise ValueError(f"cell must be >= 1, got {cell}")
    rows = (np.arange(height) // cell) % 2
    cols = (np.arange(width) // cell) % 2
    board = rows[:, None] ^ cols[None, :]
    return np.where(board, high, low).astype(np.uint8)


def gradient(width: int, height: int, low: int = 80, high: int = 190,
             levels: int = 3) -> np.ndarray:
    """Horizontal ramp from ``low`` to ``high``.

    With ``levels >= 2`` the ramp is rendered through that many evenly spaced
    intensities with 4x4 Bayer ordered dithering, the classic banding-free
    rendering of a gradient at reduced depth. ``levels = 0`` gives the smooth
    per-column ramp.
    """
    _check_dims(width, height)
    if levels != 0 and levels < 2:
        raise ValueError(f"levels must be 0 (smooth) or >= 2, got {levels}")
    if width == 1:
        ramp = np.zeros(1)
    else:
        ramp = np.arange(width) / (width - 1)
    if levels == 0:
        vals = np.round(low + ramp * (high - low))
        return np.tile(vals.astype(np.uint8), (height, 1))
    target = np.tile(ramp, (height, 1)) * (levels - 1)
    base = np.floor(target)
    frac = target - base
    thresholds = (_BAYER4 + 0.5) / _BAYER4.size
    tile = np.tile(thresholds, (height // 4 + 1, width // 4 + 1))[:height, :width]
    quantized = base + (frac > tile)
    vals = np.round(low + quantized * (high - low) / (levels - 1))
    return vals.astype(np.uint8)


def _check_dims(width: int, height: int) -> None:
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be >= 1, got {width}x{height}")


PATTERNS = {
    "flat": flat,
    "step": step_edge,
    "checker": checkerboard,
    "gradient": gradient,
}


def make_pattern(name: str, width: int, height: int, **kwargs) -> np.ndarray:
    """Build a named pattern; unknown names raise ValueError."""
    try:
        fn = PATTERNS[name]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}; choose from {sorted(PATTERNS)}") from None
    return fn(width, height, **kwargs)
