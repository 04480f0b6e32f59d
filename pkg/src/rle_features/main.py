"""
Command-line front end for rle_features.

    rle-features encode page.pbm page.rle
    rle-features decode page.rle page.pbm
    rle-features features page.rle --feature row-profile
    rle-features verify page.rle
    rle-features bench corpus/ --reps 5 --format csv
    rle-features info page.rle

Paths may be ``-`` for stdin/stdout. Exit codes: 0 success, 1 verification
mismatch, 2 usage error, 3 I/O or format error.
"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from rle_features.config import Settings, load_settings
from rle_features.core import (
    BENCH_FEATURES,
    FEATURE_NAMES,
    BenchmarkRunner,
    FeatureExporter,
    FeatureOptions,
    FeaturePipeline,
    FeatureVerifier,
    PbmCodec,
    RleCodec,
    RleFileCodec,
)
from rle_features.exceptions import CorpusEmptyError, FormatError, MismatchDetectedError
from rle_features.models import CommandOutcome, ExitCode, HistogramKind
from rle_features.utils import load_corpus, load_document, load_image, write_output

STDIO = "-"


# ===== ARGUMENT TYPES =====


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _bin_count(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {value}")
    return value


def _log_base(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value) or not value > 0 or value == 1:
        raise argparse.ArgumentTypeError(f"must be finite, positive and not 1, got {text}")
    return value


def _feature_list(text: str) -> list:
    names = [name.strip() for name in text.split(",") if name.strip()]
    unknown = [name for name in names if name not in BENCH_FEATURES]
    if not names or unknown:
        raise argparse.ArgumentTypeError(
            f"unknown bench feature(s) {unknown or text!r}; choose from {', '.join(BENCH_FEATURES)}"
        )
    return names


def _same_file(source: str, destination: str) -> bool:
    if STDIO in (source, destination):
        return False
    return Path(source).resolve() == Path(destination).resolve()


# ===== COMMANDS =====


def cmd_encode(args: argparse.Namespace) -> CommandOutcome:
    """PBM (P1/P4) -> RLE1."""
    if _same_file(args.input, args.output):
        return CommandOutcome(ExitCode.USAGE_ERROR, "error: output path is the input path")
    image = load_image(args.input)
    doc = RleCodec().encode_rle(image)
    write_output(args.output, RleFileCodec().write_rle_file(doc))
    return CommandOutcome(ExitCode.SUCCESS)


def cmd_decode(args: argparse.Namespace) -> CommandOutcome:
    """RLE1 -> PBM (P4)."""
    if _same_file(args.input, args.output):
        return CommandOutcome(ExitCode.USAGE_ERROR, "error: output path is the input path")
    doc = load_document(args.input)
    image = RleCodec().decode_rle(doc)
    write_output(args.output, PbmCodec().write_pbm(image))
    return CommandOutcome(ExitCode.SUCCESS)


def cmd_features(args: argparse.Namespace) -> CommandOutcome:
    if _same_file(args.input, args.output):
        return CommandOutcome(ExitCode.USAGE_ERROR, "error: output path is the input path")
    doc = load_document(args.input)
    options = FeatureOptions(
        log_base=args.log_base,
        bins=args.bins,
        histogram_kind=HistogramKind(args.kind),
    )
    value = FeaturePipeline(options).extract(args.feature, doc)
    write_output(args.output, FeatureExporter().render(value, args.format))
    return CommandOutcome(ExitCode.SUCCESS)


def cmd_verify(args: argparse.Namespace) -> CommandOutcome:
    doc = load_document(args.input)
    options = FeatureOptions(log_base=args.log_base, bins=args.bins)
    report = FeatureVerifier(FeaturePipeline(options)).verify(doc)
    write_output(STDIO, FeatureExporter().verification_table(report))

    if report.passed:
        return CommandOutcome(ExitCode.SUCCESS)
    first = report.failures[0]
    return CommandOutcome(
        ExitCode.MISMATCH, f"verification failed: {first.feature}: {first.detail}"
    )


def cmd_bench(args: argparse.Namespace) -> CommandOutcome:
    corpus = load_corpus(args.corpus_dir)
    runner = BenchmarkRunner(
        FeaturePipeline(FeatureOptions(log_base=args.log_base)),
        max_workers=args.workers,
    )
    reports = runner.run_benchmark(corpus, features=args.features, repetitions=args.reps)

    exporter = FeatureExporter()
    text = exporter.bench_json(reports) if args.format == "json" else exporter.bench_csv(reports)
    write_output(args.output, text)
    return CommandOutcome(ExitCode.SUCCESS)


def cmd_info(args: argparse.Namespace) -> CommandOutcome:
    """Sizes of the compressed representation."""
    doc = load_document(args.input)
    pipeline = FeaturePipeline()
    info = {
        "height_m": doc.height_m,
        "width_n": doc.width_n,
        "padded_width": doc.padded_width,
        "total_runs": doc.total_runs,
        "compression_ratio": doc.compression_ratio,
        "black_pixels": pipeline.extract("row-profile", doc).total,
        "blank_lines": pipeline.extract("blank-lines", doc),
    }
    write_output(STDIO, json.dumps(info, indent=2) + "\n")
    return CommandOutcome(ExitCode.SUCCESS)


# ===== PARSER =====


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rle-features",
        description="Projection profiles, run-histograms and entropy straight "
        "from run-length compressed bitonal documents.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    encode = commands.add_parser("encode", help="encode a PBM image as RLE1")
    encode.add_argument("input", help="P1/P4 PBM file, or - for stdin")
    encode.add_argument("output", help="RLE1 file, or - for stdout")
    encode.set_defaults(handler=cmd_encode)

    decode = commands.add_parser("decode", help="decode an RLE1 document to P4 PBM")
    decode.add_argument("input", help="RLE1 file, or - for stdin")
    decode.add_argument("output", help="PBM file, or - for stdout")
    decode.set_defaults(handler=cmd_decode)

    features = commands.add_parser("features", help="extract one feature from an RLE1 document")
    features.add_argument("input", help="RLE1 file, or - for stdin")
    features.add_argument("--feature", required=True, choices=FEATURE_NAMES)
    features.add_argument(
        "--log-base",
        type=_log_base,
        default=settings["log_base"],
        help="entropy log base (default: %(default)s, env RLE_FEATURES_LOG_BASE)",
    )
    features.add_argument(
        "--bins",
        type=_bin_count,
        default=settings["log_bins"],
        help="log-hist bin count, >= 2 (default: %(default)s)",
    )
    features.add_argument(
        "--kind",
        choices=[kind.value for kind in HistogramKind],
        default=HistogramKind.COMBINED.value,
        help="histogram rebinned by log-hist (default: %(default)s)",
    )
    features.add_argument("--format", choices=FeatureExporter.FORMATS, default="csv")
    features.add_argument("-o", "--output", default=STDIO, help="output file (default: stdout)")
    features.set_defaults(handler=cmd_features)

    verify = commands.add_parser(
        "verify", help="check every compressed-domain feature against the bitmap oracle"
    )
    verify.add_argument("input", help="RLE1 file, or - for stdin")
    verify.add_argument("--log-base", type=_log_base, default=settings["log_base"])
    verify.add_argument("--bins", type=_bin_count, default=settings["log_bins"])
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="time compressed vs decompress-then-extract")
    bench.add_argument("corpus_dir", help="directory of .rle files")
    bench.add_argument(
        "--features",
        type=_feature_list,
        default=list(BENCH_FEATURES),
        help=f"comma-separated subset of {','.join(BENCH_FEATURES)}",
    )
    bench.add_argument(
        "--reps",
        type=_positive_int,
        default=settings["bench_reps"],
        help="best-of-N repetitions (default: %(default)s)",
    )
    bench.add_argument("--log-base", type=_log_base, default=settings["log_base"])
    bench.add_argument(
        "--workers",
        type=_positive_int,
        default=None,
        help="thread-pool size; > 1 switches to throughput mode",
    )
    bench.add_argument("--format", choices=FeatureExporter.FORMATS, default="csv")
    bench.add_argument("-o", "--output", default=STDIO, help="output file (default: stdout)")
    bench.set_defaults(handler=cmd_bench)

    info = commands.add_parser("info", help="print sizes of an RLE1 document")
    info.add_argument("input", help="RLE1 file, or - for stdin")
    info.set_defaults(handler=cmd_info)

    return parser


def _run_command(
    handler: Callable[[argparse.Namespace], CommandOutcome], args: argparse.Namespace
) -> CommandOutcome:
    logger = logging.getLogger(__name__)
    try:
        return handler(args)
    except MismatchDetectedError as e:
        return CommandOutcome(ExitCode.MISMATCH, f"verification failed: {e}")
    except (FormatError, CorpusEmptyError) as e:
        return CommandOutcome(ExitCode.IO_ERROR, f"error: {e}")
    except OSError as e:
        logger.debug("I/O failure", exc_info=True)
        return CommandOutcome(ExitCode.IO_ERROR, f"error: {e}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main execution function; returns the process exit code."""
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.USAGE_ERROR)

    # Configure logging
    logging.basicConfig(
        level=settings["log_level"],
        format="%(levelname)s - %(message)s",
    )

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    outcome = _run_command(args.handler, args)
    if outcome.diagnostics:
        print(outcome.diagnostics, file=sys.stderr)
    return int(outcome.exit_code)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
