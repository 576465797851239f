"""Salt-and-pepper image denoising with an interquartile-range outlier filter.

Images are 2-d uint8 numpy arrays. The filters are exposed both as plain
functions (:func:`denoise_iqr`, :func:`denoise_median`) and as stateless
sklearn-style transformers (:class:`IqrDenoiser`, :class:`MedianDenoiser`,
:class:`SaltPepperNoise`) so they compose with pipelines and grid search.
"""

from .image import (
    BadHeader,
    BadMagic,
    MaxvalOutOfRange,
    PgmError,
    TruncatedData,
    check_image,
    load_pgm,
    neighbors8,
    read_pgm,
    save_pgm,
    write_pgm,
)
from .iqr import (
    IqrDenoiser,
    PixelClass,
    classify_position,
    denoise_iqr,
    detect,
    detect_tile,
    estimate_pixel,
    repair,
)
from .median import MedianDenoiser, denoise_median
from .metrics import PsnrResult, psnr
from .noise import SaltPepperNoise, Xorshift64Star, add_salt_pepper, derive_seed
from .stats import Quartiles, median_of, quartiles

__version__ = "0.1.0"

__all__ = [
    "BadHeader",
    "BadMagic",
    "IqrDenoiser",
    "MaxvalOutOfRange",
    "MedianDenoiser",
    "PgmError",
    "PixelClass",
    "PsnrResult",
    "Quartiles",
    "SaltPepperNoise",
    "TruncatedData",
    "Xorshift64Star",
    "add_salt_pepper",
    "check_image",
    "classify_position",
    "denoise_iqr",
    "denoise_median",
    "derive_seed",
    "detect",
    "detect_tile",
    "estimate_pixel",
    "load_pgm",
    "median_of",
    "neighbors8",
    "psnr",
    "quartiles",
    "read_pgm",
    "repair",
    "save_pgm",
    "write_pgm",
]
