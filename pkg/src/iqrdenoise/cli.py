"""Command-line interface: noise injection, denoising, PSNR, benchmarks.

Exit codes: 0 success, 1 processing error (malformed PGM, write failure),
2 usage or parameter error (bad flags, unreadable input path).
"""

from __future__ import annotations

import argparse
import sys

from .bench import DEFAULT_WINDOWS, run_bench, write_csv
from .image import PgmError, load_pgm, save_pgm
from .iqr import DEFAULT_T1, DEFAULT_T2, DEFAULT_WINDOW, FALLBACKS, denoise_iqr
from .median import denoise_median
from .metrics import psnr
from .noise import add_salt_pepper
from .synth import PATTERNS, make_pattern

__all__ = ["main", "entrypoint"]

_GEN_PARAMS = {
    "flat": {"value"},
    "step": {"low", "high", "run"},
    "checker": {"cell", "low", "high"},
    "gradient": {"low", "high", "levels"},
}


class CliError(Exception):
    """Failure with an explicit exit code."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_input(path: str):
    try:
        return load_pgm(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", 2) from exc


def _parse_windows(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("window sweep is empty")
    return values


def _cmd_gen(args) -> int:
    given = {
        name: value
        for name, value in (
            ("value", args.value),
            ("low", args.low),
            ("high", args.high),
            ("cell", args.cell),
            ("run", args.run),
            ("levels", args.levels),
        )
        if value is not None
    }
    unknown = set(given) - _GEN_PARAMS[args.pattern]
    if unknown:
        raise CliError(
            f"flags {sorted(unknown)} do not apply to pattern {args.pattern!r}", 2
        )
    img = make_pattern(args.pattern, args.width, args.height, **given)
    save_pgm(args.out, img)
    return 0


def _cmd_noise(args) -> int:
    img = _load_input(args.input)
    noisy = add_salt_pepper(img, density=args.density, seed=args.seed)
    save_pgm(args.output, noisy)
    return 0


def _cmd_denoise(args) -> int:
    img = _load_input(args.input)
    if args.filter == "iqr":
        window = DEFAULT_WINDOW if args.window is None else args.window
        out = denoise_iqr(img, window=window, t1=args.t1, t2=args.t2,
                          fallback=args.fallback)
    else:
        window = 3 if args.window is None else args.window
        out = denoise_median(img, window=window)
    save_pgm(args.output, out)
    return 0


def _cmd_psnr(args) -> int:
    result = psnr(_load_input(args.a), _load_input(args.b))
    db = "inf" if result.is_infinite else f"{result.psnr_db:.6f}"
    print(f"psnr_db={db} mse={result.mse:.6f}")
    return 0


def _cmd_bench(args) -> int:
    images = []
    for path in args.inputs:
        stem = path.rsplit("/", 1)[-1]
        stem = stem[:-4] if stem.lower().endswith(".pgm") else stem
        images.append((stem, _load_input(path)))
    records = run_bench(images, windows=args.windows, density=args.density,
                        seed=args.seed, t1=args.t1, t2=args.t2,
                        fallback=args.fallback)
    write_csv(records, args.out)
    return 0


def _add_threshold_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t1", type=float, default=DEFAULT_T1,
                        help="threshold left of Q1 (default %(default)s)")
    parser.add_argument("--t2", type=float, default=DEFAULT_T2,
                        help="threshold right of Q3 (default %(default)s)")
    parser.add_argument("--fallback", choices=FALLBACKS, default="cleanmedian",
                        help="value for pixels with no clean neighbor")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iqrdenoise",
        description="IQR outlier filter for salt-and-pepper noise, with a "
                    "median baseline and PSNR benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a synthetic PGM test image")
    p.add_argument("--pattern", choices=sorted(PATTERNS), required=True)
    p.add_argument("--width", type=int, default=256)
    p.add_argument("--height", type=int, default=256)
    p.add_argument("--value", type=int, help="flat: constant intensity")
    p.add_argument("--low", type=int, help="step/checker/gradient: low intensity")
    p.add_argument("--high", type=int, help="step/checker/gradient: high intensity")
    p.add_argument("--cell", type=int, help="checker: square side length")
    p.add_argument("--run", type=int, help="step: rows per 1-column boundary drift (0 = vertical)")
    p.add_argument("--levels", type=int, help="gradient: dither levels (0 = smooth ramp)")
    p.add_argument("--out", required=True, help="output PGM path")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("noise", help="inject reproducible salt-and-pepper noise")
    p.add_argument("input", help="input PGM path")
    p.add_argument("output", help="output PGM path")
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_noise)

    p = sub.add_parser("denoise", help="run one filter over a PGM image")
    p.add_argument("input", help="input PGM path")
    p.add_argument("output", help="output PGM path")
    p.add_argument("--filter", choices=("iqr", "median"), default="iqr")
    p.add_argument("--window", type=int, default=None,
                   help="window size (default: 8 for iqr, 3 for median)")
    _add_threshold_flags(p)
    p.set_defaults(func=_cmd_denoise)

    p = sub.add_parser("psnr", help="PSNR between two equal-sized PGM images")
    p.add_argument("a", help="reference PGM path")
    p.add_argument("b", help="comparison PGM path")
    p.set_defaults(func=_cmd_psnr)

    p = sub.add_parser("bench", help="sweep window sizes and write a CSV report")
    p.add_argument("inputs", nargs="+", help="input PGM paths")
    p.add_argument("--windows", type=_parse_windows, default=DEFAULT_WINDOWS,
                   help="comma-separated odd window sizes (default 3,5,7)")
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    _add_threshold_flags(p)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PgmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
