#!/usr/bin/env python3
"""
Corpus generation script for rle_features.

Writes synthetic pages as .pbm / .rle pairs so `rle-features bench` has
something to time. It can be run independently of the main application.
"""

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

# Add the src directory to the Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from rle_features.core import PbmCodec, RleCodec, RleFileCodec
from rle_features.utils import random_image, text_page


def setup_logging() -> None:
    """Configure logging for the script."""
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stdout)],
    )


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Generate a synthetic bitonal corpus")
    parser.add_argument("output_dir", type=Path, help="directory to write pages into")
    parser.add_argument("--count", type=int, default=10, help="number of pages (default: 10)")
    parser.add_argument("--height", type=int, default=1000)
    parser.add_argument("--width", type=int, default=1000)
    parser.add_argument(
        "--style",
        choices=["text", "noise"],
        default="text",
        help="mostly-blank text-like pages, or uniform noise",
    )
    parser.add_argument("--density", type=float, default=0.1, help="black density for noise")
    parser.add_argument("--seed", type=int, default=0)
    return parser.parse_args(argv)


def write_corpus(args: argparse.Namespace) -> None:
    """Write ``args.count`` pages as page-NNN.pbm / page-NNN.rle."""
    logger = logging.getLogger(__name__)
    args.output_dir.mkdir(parents=True, exist_ok=True)

    rng = np.random.default_rng(args.seed)
    rle_codec = RleCodec()
    pbm_codec = PbmCodec()
    rle_file_codec = RleFileCodec()

    for index in range(1, args.count + 1):
        if args.style == "text":
            image = text_page(rng, args.height, args.width)
        else:
            image = random_image(rng, args.height, args.width, args.density)
        doc = rle_codec.encode_rle(image)

        stem = args.output_dir / f"page-{index:03d}"
        stem.with_suffix(".pbm").write_bytes(pbm_codec.write_pbm(image))
        stem.with_suffix(".rle").write_bytes(rle_file_codec.write_rle_file(doc))
        logger.info(
            f"Wrote {stem.name}: {doc.height_m}x{doc.width_n}, "
            f"n'={doc.padded_width}, ratio {doc.compression_ratio:.1f}"
        )


def main() -> None:
    """Main function to generate the corpus."""
    setup_logging()
    logger = logging.getLogger(__name__)

    try:
        args = parse_args()
        logger.info(f"Generating {args.count} {args.style} page(s) in {args.output_dir}...")
        write_corpus(args)
        logger.info("Corpus generation completed successfully!")
    except Exception as e:
        logger.error(f"Corpus generation failed: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
