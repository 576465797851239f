"""Grayscale raster validation, neighborhoods, and bit-exact PGM file I/O.

Images are 2-d uint8 numpy arrays of shape (height, width), row-major with
the origin at the top-left pixel. Every public operation in this package
funnels its input through :func:`check_image` so the whole pipeline works on
one canonical representation.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "PgmError",
    "BadMagic",
    "BadHeader",
    "TruncatedData",
    "MaxvalOutOfRange",
    "check_image",
    "neighbors8",
    "read_pgm",
    "write_pgm",
    "load_pgm",
    "save_pgm",
]

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmError(ValueError):
    """Base class for PGM parse failures."""


class BadMagic(PgmError):
    """File does not start with a P5 or P2 magic number."""


class BadHeader(PgmError):
    """Dimensions or maxval are missing or non-numeric."""


class TruncatedData(PgmError):
    """Raster holds fewer samples than width * height."""


class MaxvalOutOfRange(PgmError):
    """Header maxval is outside [1, 255]."""


def check_image(img) -> np.ndarray:
    """Validate a grayscale image and return it as a C-contiguous uint8 array.

    Accepts any 2-d array-like of integers in [0, 255] with width and height
    of at least 1. uint8 input passes through without copying.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d grayscale image, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"image dimensions must be at least 1x1, got {arr.shape}")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"pixel values must be integers, got dtype {arr.dtype}")
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("pixel values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return np.ascontiguousarray(arr)


def neighbors8(img, coord) -> list[tuple[int, int]]:
    """In-bounds coordinates at Chebyshev distance 1 from ``coord``.

    Row-major over the eight offsets, so the order is deterministic. Counts
    are 3 / 5 / 8 for corner / border / interior pixels of images at least
    2x2; degenerate 1-wide or 1-tall images simply yield whatever exists.
    """
    h, w = np.asarray(img).shape[:2]
    r, c = coord
    if not (0 <= r < h and 0 <= c < w):
        raise IndexError(f"coordinate {coord!r} out of bounds for {h}x{w} image")
    out = []
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr == 0 and dc == 0:
                continue
            rr, cc = r + dr, c + dc
            if 0 <= rr < h and 0 <= cc < w:
                out.append((rr, cc))
    return out


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Next whitespace-delimited token, skipping '#' comments to end of line."""
    n = len(data)
    while pos < n:
        byte = data[pos : pos + 1]
        if byte in _WHITESPACE:
            pos += 1
        elif byte == b"#":
            nl = data.find(b"\n", pos)
            pos = n if nl == -1 else nl + 1
        else:
            break
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos)
    if not token or not token.isdigit():
        raise BadHeader(f"missing or non-numeric {what}: {token!r}")
    return int(token), pos


def read_pgm(data: bytes) -> np.ndarray:
    """Decode a binary (P5) or ASCII (P2) PGM byte string with maxval <= 255.

    The raster is reproduced exactly as stored; a maxval below 255 does not
    rescale intensities. Raises :class:`PgmError` subclasses on malformed
    input.
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise BadMagic(f"not a P5/P2 PGM file (magic {magic!r})")
    width, pos = _header_int(data, 2, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise BadHeader(f"dimensions must be positive, got {width}x{height}")
    if not 1 <= maxval <= 255:
        raise MaxvalOutOfRange(f"maxval must be in [1, 255], got {maxval}")
    count = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
            raise BadHeader("expected single whitespace between maxval and raster")
        raster = data[pos + 1 : pos + 1 + count]
        if len(raster) < count:
            raise TruncatedData(f"raster holds {len(raster)} of {count} samples")
        pixels = np.frombuffer(raster, dtype=np.uint8, count=count)
    else:
        samples = np.empty(count, dtype=np.uint8)
        for i in range(count):
            token, pos = _next_token(data, pos)
            if not token:
                raise TruncatedData(f"raster holds {i} of {count} samples")
            if not token.isdigit():
                raise TruncatedData(f"non-numeric raster sample {token!r}")
            value = int(token)
            if value > 255:
                raise TruncatedData(f"raster sample {value} exceeds 255")
            samples[i] = value
        pixels = samples

    return pixels.reshape(height, width).copy()


def write_pgm(img) -> bytes:
    """Encode an image as canonical binary P5 with maxval 255.

    The output is bit-exact and deterministic: header ``P5\\n<w> <h>\\n255\\n``
    followed by the row-major raster bytes.
    """
    arr = check_image(img)
    h, w = arr.shape
    return b"P5\n%d %d\n255\n" % (w, h) + arr.tobytes()


def load_pgm(path: str | os.PathLike) -> np.ndarray:
    """Read a PGM file from disk."""
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path: str | os.PathLike, img) -> None:
    """Write an image to disk as canonical binary P5."""
    with open(path, "wb") as fh:
        fh.write(write_pgm(img))
