import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rle_features.core.profile_extractor import ProfileExtractor
from rle_features.exceptions import InvalidLogBaseError
from rle_features.models import (
    BitonalImage,
    EntropyAxis,
    EntropyResult,
    LineEntropy,
    Quantifier,
    RleDocument,
    RunRow,
    TransitionSummary,
)

DEFAULT_LOG_BASE = 2.0


def _log_factor(log_base: float) -> float:
    if (
        isinstance(log_base, bool)
        or not math.isfinite(log_base)
        or not log_base > 0
        or log_base == 1
    ):
        raise InvalidLogBaseError(f"log base must be finite, positive and not 1, got {log_base!r}")
    return math.log(log_base)


def _binary_entropy(p: float, ln_base: float) -> float:
    """p*log(1/p) + (1-p)*log(1/(1-p)), with 0*log(1/0) taken as 0."""
    total = 0.0
    if p > 0:
        total += p * (math.log(1 / p) / ln_base)
    if p < 1:
        total += (1 - p) * (math.log(1 / (1 - p)) / ln_base)
    return total


class EntropyExtractor:
    """Transition scanning and CEQ/SEQ entropy quantifiers.

    Horizontal values come straight from the run lists; vertical values use
    the column walk of ``ProfileExtractor.iter_columns``. Every quantity has a
    bitmap-domain oracle built on an independent adjacent-pixel scan.
    """

    def __init__(self, profile_extractor: Optional[ProfileExtractor] = None):
        self.logger = logging.getLogger(__name__)
        self.profile_extractor = profile_extractor or ProfileExtractor()

    # ===== TRANSITIONS =====

    @staticmethod
    def row_transitions(row: RunRow, width_n: int) -> TransitionSummary:
        """Each black run opens a 0->1 transition and each later white run a
        1->0 transition, at the position after the runs before it.
        """
        pos: List[int] = []
        neg: List[int] = []
        prefix = 0
        for index, length in enumerate(row.runs):
            if index & 1:
                pos.append(prefix + 1)
            elif index:
                neg.append(prefix + 1)
            prefix += length
        return TransitionSummary(tuple(pos), tuple(neg), width_n)

    @staticmethod
    def line_transitions(bits: Sequence[int]) -> TransitionSummary:
        """Transitions of an explicit bit line; a leading 1 counts at position 1."""
        pos: List[int] = []
        neg: List[int] = []
        previous = 0
        for position, bit in enumerate(bits, 1):
            if bit != previous:
                (pos if bit else neg).append(position)
                previous = bit
        return TransitionSummary(tuple(pos), tuple(neg), len(bits))

    def column_transitions(self, doc: RleDocument) -> Tuple[TransitionSummary, ...]:
        return tuple(
            self.line_transitions(column)
            for column in self.profile_extractor.iter_columns(doc)
        )

    # ===== PER-LINE QUANTIFIERS =====

    @staticmethod
    def ceq_line(summary: TransitionSummary, log_base: float = DEFAULT_LOG_BASE) -> LineEntropy:
        """Binary entropy of the +ve and -ve transition rates.

        The rate divides by the line_length - 1 possible transitions. A line
        shorter than 2 pixels has none and scores (0, 0), flagged degenerate.
        """
        ln_base = _log_factor(log_base)
        possible = summary.line_length - 1
        if possible < 1:
            return LineEntropy(0.0, 0.0, degenerate=True)
        return LineEntropy(
            _binary_entropy(summary.pos_count / possible, ln_base),
            _binary_entropy(summary.neg_count / possible, ln_base),
        )

    @staticmethod
    def seq_line(
        summary: TransitionSummary,
        m: int,
        n: int,
        r_a: int,
        log_base: float = DEFAULT_LOG_BASE,
    ) -> LineEntropy:
        """Positional entropy, summed over the transition positions of line r_a:

            (r_a/m) * ((pos/n) * log(n/pos) + (m - pos/n) * log(m/(m+n-pos)))

        Terms may be negative; both log arguments stay positive for 1 <= pos <= n.
        """
        ln_base = _log_factor(log_base)
        weight = r_a / m

        def term(pos: int) -> float:
            return weight * (
                (pos / n) * (math.log(n / pos) / ln_base)
                + (m - pos / n) * (math.log(m / (m + n - pos)) / ln_base)
            )

        positive = 0.0
        for pos in summary.pos_positions:
            positive += term(pos)
        negative = 0.0
        for pos in summary.neg_positions:
            negative += term(pos)
        return LineEntropy(positive, negative)

    # ===== DOCUMENT TOTALS =====

    def _ceq_result(
        self,
        summaries: Sequence[TransitionSummary],
        axis: EntropyAxis,
        log_base: float,
    ) -> EntropyResult:
        per_line = tuple(self.ceq_line(summary, log_base) for summary in summaries)
        degenerate = tuple(i for i, line in enumerate(per_line, 1) if line.degenerate)
        if degenerate:
            self.logger.warning(
                f"CEQ {axis.value}: {len(degenerate)} line(s) shorter than 2 pixels scored as 0"
            )
        return EntropyResult(
            per_line=per_line,
            quantifier=Quantifier.CEQ,
            axis=axis,
            log_base=log_base,
            degenerate_lines=degenerate,
        )

    def _seq_result(
        self,
        summaries: Sequence[TransitionSummary],
        m: int,
        n: int,
        axis: EntropyAxis,
        log_base: float,
    ) -> EntropyResult:
        per_line = tuple(
            self.seq_line(summary, m, n, r_a, log_base)
            for r_a, summary in enumerate(summaries, 1)
        )
        return EntropyResult(
            per_line=per_line,
            quantifier=Quantifier.SEQ,
            axis=axis,
            log_base=log_base,
        )

    def row_transition_summaries(self, doc: RleDocument) -> Tuple[TransitionSummary, ...]:
        return tuple(self.row_transitions(row, doc.width_n) for row in doc.rows)

    def ceq_horizontal(self, doc: RleDocument, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._ceq_result(
            self.row_transition_summaries(doc), EntropyAxis.HORIZONTAL, log_base
        )

    def seq_horizontal(self, doc: RleDocument, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._seq_result(
            self.row_transition_summaries(doc),
            doc.height_m,
            doc.width_n,
            EntropyAxis.HORIZONTAL,
            log_base,
        )

    def ceq_vertical(self, doc: RleDocument, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._ceq_result(self.column_transitions(doc), EntropyAxis.VERTICAL, log_base)

    def seq_vertical(self, doc: RleDocument, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        # columns play the role of rows: m and n swap
        return self._seq_result(
            self.column_transitions(doc),
            doc.width_n,
            doc.height_m,
            EntropyAxis.VERTICAL,
            log_base,
        )

    # ===== BITMAP ORACLES =====

    @staticmethod
    def bitmap_transitions(pixels: np.ndarray) -> Tuple[TransitionSummary, ...]:
        """Adjacent-pixel scan of every row of a bit matrix, with a virtual
        white pixel before position 1.
        """
        padded = np.pad(pixels.astype(np.int8), ((0, 0), (1, 0)))
        steps = np.diff(padded, axis=1)
        width = pixels.shape[1]
        summaries = []
        for line in steps:
            summaries.append(
                TransitionSummary(
                    tuple((np.flatnonzero(line == 1) + 1).tolist()),
                    tuple((np.flatnonzero(line == -1) + 1).tolist()),
                    width,
                )
            )
        return tuple(summaries)

    def row_transitions_oracle(self, image: BitonalImage) -> Tuple[TransitionSummary, ...]:
        return self.bitmap_transitions(image.pixels)

    def column_transitions_oracle(self, image: BitonalImage) -> Tuple[TransitionSummary, ...]:
        return self.bitmap_transitions(image.pixels.T)

    def ceq_horizontal_oracle(self, image: BitonalImage, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._ceq_result(
            self.row_transitions_oracle(image), EntropyAxis.HORIZONTAL, log_base
        )

    def seq_horizontal_oracle(self, image: BitonalImage, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._seq_result(
            self.row_transitions_oracle(image),
            image.height_m,
            image.width_n,
            EntropyAxis.HORIZONTAL,
            log_base,
        )

    def ceq_vertical_oracle(self, image: BitonalImage, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._ceq_result(
            self.column_transitions_oracle(image), EntropyAxis.VERTICAL, log_base
        )

    def seq_vertical_oracle(self, image: BitonalImage, log_base: float = DEFAULT_LOG_BASE) -> EntropyResult:
        return self._seq_result(
            self.column_transitions_oracle(image),
            image.width_n,
            image.height_m,
            EntropyAxis.VERTICAL,
            log_base,
        )
