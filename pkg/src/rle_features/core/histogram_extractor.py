import logging
from collections import Counter
from typing import Optional, Tuple

import numpy as np

from rle_features.exceptions import InvalidBinCountError
from rle_features.models import (
    BitonalImage,
    HistogramKind,
    LogBin,
    LogHistogram,
    RleDocument,
    RunHistogram,
)

DEFAULT_LOG_BINS = 9


class HistogramExtractor:
    """Black, white and combined run-histograms, log rebinning and blank lines."""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    # ===== COMPRESSED DOMAIN =====

    def black_run_histogram(self, doc: RleDocument) -> RunHistogram:
        counts = Counter()
        for row in doc.rows:
            counts.update(row.black_runs)
        return RunHistogram(counts=dict(counts), kind=HistogramKind.BLACK)

    def white_run_histogram(self, doc: RleDocument) -> RunHistogram:
        counts = Counter()
        for row in doc.rows:
            counts.update(row.white_runs)
        # a leading 0 encodes "row starts black", not a run
        counts.pop(0, None)
        return RunHistogram(counts=dict(counts), kind=HistogramKind.WHITE)

    def combined_run_histogram(self, doc: RleDocument) -> RunHistogram:
        return self.combine(self.black_run_histogram(doc), self.white_run_histogram(doc))

    @staticmethod
    def combine(black: RunHistogram, white: RunHistogram) -> RunHistogram:
        counts = Counter(black.counts)
        counts.update(white.counts)
        return RunHistogram(counts=dict(counts), kind=HistogramKind.COMBINED)

    def run_histograms(self, doc: RleDocument) -> Tuple[RunHistogram, RunHistogram, RunHistogram]:
        """Black, white and combined histograms from a single pass each."""
        black = self.black_run_histogram(doc)
        white = self.white_run_histogram(doc)
        return black, white, self.combine(black, white)

    def blank_line_count(self, doc: RleDocument) -> int:
        """Rows that are a single white run spanning the whole width."""
        blank = (doc.width_n,)
        return sum(1 for row in doc.rows if row.runs == blank)

    # ===== LOGARITHMIC SCALE =====

    @staticmethod
    def log_bin_edges(bin_count: int = DEFAULT_LOG_BINS) -> Tuple[Tuple[int, Optional[int]], ...]:
        """[1], [2], [3-4], [5-8], ... with an open-ended last bin."""
        if isinstance(bin_count, bool) or not isinstance(bin_count, int) or bin_count < 2:
            raise InvalidBinCountError(f"bin_count must be an integer >= 2, got {bin_count!r}")
        edges = [(1, 1)]
        for i in range(2, bin_count):
            edges.append((2 ** (i - 2) + 1, 2 ** (i - 1)))
        edges.append((2 ** (bin_count - 2) + 1, None))
        return tuple(edges)

    @staticmethod
    def log_bin_index(length: int, bin_count: int) -> int:
        """0-based bin of a run length; lengths past the ladder go to the last bin."""
        return min((length - 1).bit_length(), bin_count - 1)

    def log_scale_histogram(
        self, hist: RunHistogram, bin_count: int = DEFAULT_LOG_BINS
    ) -> LogHistogram:
        edges = self.log_bin_edges(bin_count)
        frequencies = [0] * bin_count
        for length, frequency in hist.counts.items():
            frequencies[self.log_bin_index(length, bin_count)] += frequency

        bins = tuple(
            LogBin(lower, upper, frequency)
            for (lower, upper), frequency in zip(edges, frequencies)
        )
        return LogHistogram(bins=bins, kind=hist.kind)

    # ===== BITMAP ORACLES =====

    @staticmethod
    def _bitmap_run_counts(image: BitonalImage) -> Tuple[Counter, Counter]:
        """Scan each pixel row for maximal runs; tally lengths by color."""
        black, white = Counter(), Counter()
        for bits in image.pixels:
            starts = np.concatenate(([0], np.flatnonzero(np.diff(bits)) + 1))
            lengths = np.diff(np.append(starts, bits.size))
            colors = bits[starts]
            black.update(lengths[colors == 1].tolist())
            white.update(lengths[colors == 0].tolist())
        return black, white

    def black_run_histogram_oracle(self, image: BitonalImage) -> RunHistogram:
        black, _ = self._bitmap_run_counts(image)
        return RunHistogram(counts=dict(black), kind=HistogramKind.BLACK)

    def white_run_histogram_oracle(self, image: BitonalImage) -> RunHistogram:
        _, white = self._bitmap_run_counts(image)
        return RunHistogram(counts=dict(white), kind=HistogramKind.WHITE)

    def combined_run_histogram_oracle(self, image: BitonalImage) -> RunHistogram:
        black, white = self._bitmap_run_counts(image)
        return RunHistogram(counts=dict(black + white), kind=HistogramKind.COMBINED)

    def run_histograms_oracle(
        self, image: BitonalImage
    ) -> Tuple[RunHistogram, RunHistogram, RunHistogram]:
        black, white = self._bitmap_run_counts(image)
        return (
            RunHistogram(counts=dict(black), kind=HistogramKind.BLACK),
            RunHistogram(counts=dict(white), kind=HistogramKind.WHITE),
            RunHistogram(counts=dict(black + white), kind=HistogramKind.COMBINED),
        )

    def blank_line_count_oracle(self, image: BitonalImage) -> int:
        return int(np.count_nonzero(image.pixels.sum(axis=1) == 0))
