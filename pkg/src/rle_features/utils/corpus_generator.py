"""Synthetic bitonal pages for benchmarks and randomized tests."""

from typing import Optional

import numpy as np

from rle_features.models import BitonalImage


def random_image(
    rng: np.random.Generator,
    height: int,
    width: int,
    density: float,
) -> BitonalImage:
    """Uniform noise: each pixel black with probability ``density``."""
    return BitonalImage((rng.random((height, width)) < density).astype(np.uint8))


def blank_page(height: int, width: int) -> BitonalImage:
    return BitonalImage(np.zeros((height, width), dtype=np.uint8))


def text_page(
    rng: np.random.Generator,
    height: int = 1000,
    width: int = 1000,
    line_count: Optional[int] = None,
    line_height: int = 12,
    margin: int = 40,
) -> BitonalImage:
    """A mostly-blank page with horizontal bands of glyph-like strokes.

    Each text line is a band of short vertical/horizontal strokes separated by
    word gaps, so rows inside a band have many runs and rows between bands are
    blank.
    """
    pixels = np.zeros((height, width), dtype=np.uint8)
    usable = height - 2 * margin
    pitch = line_height * 3
    if line_count is None:
        line_count = max(1, usable // (pitch * 2))
    line_count = max(0, min(line_count, usable // pitch))

    for line in range(line_count):
        top = margin + line * pitch
        x = margin
        while x < width - margin:
            word_length = int(rng.integers(3, 9))
            for _ in range(word_length):
                glyph_width = int(rng.integers(4, 9))
                if x + glyph_width >= width - margin:
                    break
                glyph = rng.random((line_height, glyph_width)) < 0.45
                glyph[:, 0] = True  # stem
                pixels[top : top + line_height, x : x + glyph_width] |= glyph
                x += glyph_width + 2
            x += int(rng.integers(8, 16))

    return BitonalImage(pixels)
