"""Command-line interface: ``qhfedge {detect,noise,eval,selftest}``."""
from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .evaluation import EvaluationError, RunConfig, format_report, run_detect, run_eval
from .hardy import HardyParams
from .imageio import ImageError, load_image, save_image
from .noise import NOISE_KINDS, NoiseSpec, add_noise
from .pipeline import BOUNDARIES, DETECTORS, DetectParams
from .selftest import run_selftest

SEED_ENV = "QHFEDGE_SEED"
CLEAN_SCALE = 1.5
NOISY_SCALE = 4.0

_NOISE_PARAMS = {"variance", "density", "peak"}


class UsageError(ValueError):
    pass


def parse_noise(text: str) -> NoiseSpec:
    """Parse ``kind`` or ``kind:param=value[,param=value...]``."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind not in NOISE_KINDS:
        raise UsageError(f"unknown noise kind {kind!r}; choose from {', '.join(NOISE_KINDS)}")
    kwargs = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key not in _NOISE_PARAMS:
            raise UsageError(f"bad noise parameter {item!r}; expected one of "
                             f"{', '.join(sorted(_NOISE_PARAMS))} as name=value")
        try:
            kwargs[key] = float(value)
        except ValueError:
            raise UsageError(f"noise parameter {key} needs a number, got {value!r}") from None
    return NoiseSpec(kind, **kwargs)


def _noise_arg(text: str) -> NoiseSpec:
    try:
        return parse_noise(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _add_detect_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s1", type=float, help="row-axis smoothing scale (default: "
                   f"{CLEAN_SCALE} clean, {NOISY_SCALE} with noise)")
    p.add_argument("--s2", type=float, help="column-axis smoothing scale")
    p.add_argument("--threshold", type=float, default=0.1,
                   help="edge threshold as a fraction of the largest suppressed magnitude")
    p.add_argument("--boundary", choices=BOUNDARIES, default="symmetric")
    p.add_argument("--no-normalize", dest="normalize", action="store_false",
                   help="feed raw 0-255 intensities instead of scaling to [0, 1]")
    p.add_argument("--seed", type=int, help=f"noise seed (default: ${SEED_ENV} or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhfedge", description="Colour edge detection with the quaternion Hardy filter.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="write edge maps for input images")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out", required=True,
                   help="output PNG (one input) or directory (several inputs)")
    p.add_argument("--detector", choices=DETECTORS, default="qhf")
    p.add_argument("--noise", type=_noise_arg, metavar="KIND[:PARAM=VALUE,...]",
                   help="corrupt the input before detection")
    _add_detect_options(p)

    p = sub.add_parser("noise", help="write a noisy copy of an image")
    p.add_argument("input")
    p.add_argument("--noise", type=_noise_arg, required=True, metavar="KIND[:PARAM=VALUE,...]")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)

    p = sub.add_parser("eval", help="PSNR/SSIM of noisy vs clean edge maps")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--noise", type=_noise_arg, action="append", metavar="KIND[:PARAM=VALUE,...]",
                   help="repeatable; default is all four kinds at default strength")
    p.add_argument("--detectors", default=",".join(DETECTORS),
                   help="comma-separated subset of " + ",".join(DETECTORS))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="report path (default: standard output)")
    _add_detect_options(p)

    sub.add_parser("selftest", help="run oracle cross-checks")
    return parser


def _detect_params(args, noisy: bool) -> DetectParams:
    default = NOISY_SCALE if noisy else CLEAN_SCALE
    s1 = default if args.s1 is None else args.s1
    s2 = default if args.s2 is None else args.s2
    return DetectParams(HardyParams(s1, s2), args.threshold, args.normalize, args.boundary)


def _seed(args) -> int:
    return _default_seed() if args.seed is None else args.seed


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _run(args) -> int:
    if args.command == "selftest":
        return 0 if run_selftest() else 1

    if args.command == "noise":
        spec = dataclasses.replace(args.noise, seed=_seed(args))
        save_image(add_noise(load_image(args.input), spec), args.out)
        return 0

    if args.command == "detect":
        noise = [args.noise] if args.noise else []
        config = RunConfig(inputs=args.inputs, output=args.out,
                           params=_detect_params(args, bool(noise)), noise=noise,
                           detectors=[args.detector], seed=_seed(args))
        run_detect(config)
        return 0

    detectors = [d.strip() for d in args.detectors.split(",") if d.strip()]
    config = RunConfig(inputs=args.inputs, output=args.out,
                       params=_detect_params(args, True), noise=args.noise or [],
                       detectors=detectors, report_format=args.format, seed=_seed(args))
    try:
        rows = run_eval(config)
    except EvaluationError as exc:
        _write_text(format_report(exc.rows, config.report_format), config.output)
        raise
    _write_text(format_report(rows, config.report_format), config.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (UsageError, ValueError) as exc:
        print(f"qhfedge: error: {exc}", file=sys.stderr)
        return 2
    except (ImageError, EvaluationError, OSError) as exc:
        print(f"qhfedge: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
