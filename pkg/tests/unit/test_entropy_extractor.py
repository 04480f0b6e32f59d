"""Unit tests for EntropyExtractor."""

import math

import pytest

from rle_features.core import EntropyExtractor
from rle_features.exceptions import InvalidLogBaseError
from rle_features.models import (
    BitonalImage,
    EntropyAxis,
    Quantifier,
    RleDocument,
    TransitionSummary,
)
from rle_features.utils import random_image
from tests.fixtures import sample_page


def binary_entropy(p: float) -> float:
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


@pytest.fixture
def entropy():
    return EntropyExtractor()


class TestTransitions:
    """Test suite for transition scanning on runs, columns and bitmaps."""

    def test_sample_page_rows(self, entropy, sample_doc):
        """Test the +ve/-ve positions of every sample row."""
        summaries = entropy.row_transition_summaries(sample_doc)

        assert [(s.pos_positions, s.neg_positions) for s in summaries] == sample_page.TRANSITIONS
        assert all(s.line_length == 14 for s in summaries)

    def test_sample_page_oracle(self, entropy, sample_image):
        """Test that the adjacent-pixel scan gives the same positions."""
        summaries = entropy.row_transitions_oracle(sample_image)
        assert [(s.pos_positions, s.neg_positions) for s in summaries] == sample_page.TRANSITIONS

    @pytest.mark.parametrize(
        "bits, pos, neg",
        [
            ((0, 0, 0), (), ()),
            ((1, 1, 1), (1,), ()),
            ((1, 0, 1), (1, 3), (2,)),
            ((0, 1, 1, 0), (2,), (4,)),
        ],
    )
    def test_line_transitions(self, bits, pos, neg):
        """Test that a leading black pixel counts as a 0->1 transition at 1."""
        summary = EntropyExtractor.line_transitions(bits)

        assert summary.pos_positions == pos
        assert summary.neg_positions == neg
        assert summary.line_length == len(bits)

    def test_column_transitions(self, entropy, small_doc, rle_codec):
        """Test column transitions against the transposed bitmap."""
        image = rle_codec.decode_rle(small_doc)

        assert entropy.column_transitions(small_doc) == entropy.column_transitions_oracle(image)
        assert entropy.column_transitions(small_doc)[1] == TransitionSummary((1,), (3,), 3)

    def test_transitions_interleave(self, entropy, rle_codec, random_images):
        """Test that merged +ve/-ve positions strictly alternate, starting +ve."""
        for image in random_images:
            doc = rle_codec.encode_rle(image)
            summaries = entropy.row_transition_summaries(doc) + entropy.column_transitions(doc)
            for summary in summaries:
                merged = sorted(
                    [(p, "+") for p in summary.pos_positions]
                    + [(q, "-") for q in summary.neg_positions]
                )
                positions = [position for position, _ in merged]
                signs = [sign for _, sign in merged]

                assert positions == sorted(set(positions))
                assert all(1 <= p <= summary.line_length for p in positions)
                assert signs == ["+", "-"] * (len(signs) // 2) + ["+"] * (len(signs) % 2)
                assert 0 <= summary.pos_count - summary.neg_count <= 1


class TestCeq:
    """Test suite for the transition-count entropy quantifier."""

    def test_sample_row(self, entropy, sample_doc):
        """Test that two of thirteen possible transitions give H(2/13) each."""
        result = entropy.ceq_horizontal(sample_doc)

        line = result.per_line[1]
        assert line.positive_part == pytest.approx(binary_entropy(2 / 13), rel=1e-12)
        assert line.negative_part == pytest.approx(binary_entropy(2 / 13), rel=1e-12)
        assert result.quantifier is Quantifier.CEQ
        assert result.axis is EntropyAxis.HORIZONTAL

    def test_blank_rows_score_zero(self, entropy, sample_doc):
        """Test that rows without transitions contribute nothing."""
        result = entropy.ceq_horizontal(sample_doc)

        assert result.per_line[0].total == 0.0
        assert result.per_line[12].total == 0.0
        assert result.degenerate_lines == ()

    def test_half_rate_is_one_bit(self):
        """Test that p = 1/2 gives exactly one bit."""
        summary = TransitionSummary((2,), (), 3)
        assert EntropyExtractor.ceq_line(summary).positive_part == 1.0

    def test_full_rate_is_zero(self):
        """Test that p = 1 contributes 0 by the 0*log(1/0) convention."""
        summary = EntropyExtractor.line_transitions((1, 0, 1, 0, 1))
        # 3 +ve transitions over 4 possible, 2 -ve over 4
        line = EntropyExtractor.ceq_line(summary)
        assert line.negative_part == 1.0
        assert line.positive_part == pytest.approx(binary_entropy(0.75))

        saturated = TransitionSummary((1, 2), (), 3)
        assert EntropyExtractor.ceq_line(saturated).positive_part == 0.0

    def test_single_pixel_lines_are_degenerate(self, entropy, caplog):
        """Test that width-1 rows score (0, 0) and are flagged."""
        doc = RleDocument.from_runs(1, [[1], [0, 1], [1]])

        result = entropy.ceq_horizontal(doc)

        assert result.document_total == 0.0
        assert result.degenerate_lines == (1, 2, 3)
        assert all(line.degenerate for line in result.per_line)
        assert "shorter than 2 pixels" in caplog.text

    def test_bounds(self, entropy, rle_codec, random_images):
        """Test that every CEQ part lies in [0, 1] bits."""
        for image in random_images:
            result = entropy.ceq_horizontal(rle_codec.encode_rle(image))
            for line in result.per_line:
                assert 0.0 <= line.positive_part <= 1.0
                assert 0.0 <= line.negative_part <= 1.0

    def test_change_of_base(self, entropy, sample_doc):
        """Test that natural-log values are bits times ln 2."""
        bits = entropy.ceq_horizontal(sample_doc, log_base=2.0).document_total
        nats = entropy.ceq_horizontal(sample_doc, log_base=math.e).document_total

        assert nats == pytest.approx(bits * math.log(2), rel=1e-12)

    def test_rate_symmetry(self):
        """Test that k and L-1-k transitions over the same line score the same."""
        sparse = TransitionSummary((2,), (), 4)
        dense = TransitionSummary((2, 3), (), 4)

        assert EntropyExtractor.ceq_line(sparse).positive_part == pytest.approx(
            EntropyExtractor.ceq_line(dense).positive_part, rel=1e-12
        )

    @pytest.mark.parametrize(
        "log_base", [1, 0, -2.0, True, float("inf"), float("-inf"), float("nan")]
    )
    def test_invalid_log_base(self, entropy, sample_doc, log_base):
        """Test that non-positive, non-finite and unit bases are refused."""
        with pytest.raises(InvalidLogBaseError):
            entropy.ceq_horizontal(sample_doc, log_base=log_base)

    def test_complement_keeps_parts_for_white_bounded_lines(self, entropy, rle_codec, rng):
        """Test that complementing white-bounded rows swaps their counts and keeps
        the {positive_part, negative_part} multiset.

        The complement starts black, so its edge at position 1 comes from the
        virtual white pixel and is left out of the comparison.
        """
        for density in (0.0, 0.1, 0.5, 0.9, 1.0):
            for height, width in ((1, 2), (7, 3), (16, 40), (40, 64)):
                pixels = random_image(rng, height, width, density).pixels.copy()
                pixels[:, 0] = 0
                pixels[:, -1] = 0
                image = BitonalImage(pixels)
                inverse = BitonalImage(1 - pixels)

                original = entropy.row_transition_summaries(rle_codec.encode_rle(image))
                flipped = entropy.row_transition_summaries(rle_codec.encode_rle(inverse))
                for before, after in zip(original, flipped):
                    assert after.pos_positions[0] == 1
                    swapped = TransitionSummary(
                        after.pos_positions[1:], after.neg_positions, after.line_length
                    )
                    assert swapped == TransitionSummary(
                        before.neg_positions, before.pos_positions, before.line_length
                    )

                    parts = sorted(EntropyExtractor.ceq_line(before)[:2])
                    assert sorted(EntropyExtractor.ceq_line(swapped)[:2]) == pytest.approx(
                        parts, rel=1e-12
                    )


class TestSeq:
    """Test suite for the position-weighted entropy quantifier."""

    def test_single_line(self, entropy):
        """Test 0100 (m=1, n=4): +ve at 2 and -ve at 3."""
        doc = RleDocument.from_runs(4, [[1, 1, 2]])

        line = entropy.seq_horizontal(doc).per_line[0]

        assert line.positive_part == pytest.approx(0.5 - 0.5 * math.log2(3), rel=1e-12)
        assert line.negative_part == pytest.approx(0.75 * math.log2(4 / 3) - 0.25, rel=1e-12)

    def test_row_weight(self, entropy):
        """Test that an identical transition scores r_a times more on row r_a."""
        doc = RleDocument.from_runs(4, [[1, 3], [1, 3]])

        result = entropy.seq_horizontal(doc)

        assert result.per_line[1].positive_part == pytest.approx(
            2 * result.per_line[0].positive_part, rel=1e-12
        )
        assert result.quantifier is Quantifier.SEQ

    def test_no_transitions(self, entropy):
        """Test that blank lines contribute exactly 0."""
        doc = RleDocument.from_runs(5, [[5], [5]])
        assert entropy.seq_horizontal(doc).document_total == 0.0

    def test_change_of_base(self, entropy, sample_doc):
        """Test that the log base scales every term."""
        bits = entropy.seq_horizontal(sample_doc, log_base=2.0).document_total
        decimal = entropy.seq_horizontal(sample_doc, log_base=10.0).document_total

        assert decimal == pytest.approx(bits * math.log10(2), rel=1e-12)

    def test_matches_oracle(self, entropy, sample_doc, sample_image):
        """Test that compressed and bitmap SEQ agree exactly on the sample."""
        assert entropy.seq_horizontal(sample_doc) == entropy.seq_horizontal_oracle(
            sample_image
        )


class TestVertical:
    """Test suite for vertical entropy on the column walk."""

    def test_vertical_is_horizontal_of_transpose(self, entropy, rle_codec, random_images):
        """Test that vertical values equal horizontal values of the transposed image."""
        for image in random_images:
            doc = rle_codec.encode_rle(image)
            transposed = rle_codec.encode_rle(image.transpose())

            assert (
                entropy.seq_vertical(doc).per_line == entropy.seq_horizontal(transposed).per_line
            )
            assert (
                entropy.ceq_vertical(doc).per_line == entropy.ceq_horizontal(transposed).per_line
            )

    def test_vertical_axis_label(self, entropy, small_doc):
        """Test that vertical results carry one line per column."""
        result = entropy.ceq_vertical(small_doc)

        assert result.axis is EntropyAxis.VERTICAL
        assert len(result.per_line) == small_doc.width_n

    def test_vertical_matches_oracle(self, entropy, sample_doc, sample_image):
        """Test the compressed column walk against the bitmap scan."""
        assert entropy.ceq_vertical(sample_doc) == entropy.ceq_vertical_oracle(sample_image)
        assert entropy.seq_vertical(sample_doc) == entropy.seq_vertical_oracle(sample_image)


class TestReferenceValues:
    """Single-term values evaluated independently with the math module."""

    def test_ceq_two_of_thirteen(self):
        """Test H(2/13) in bits to five decimals."""
        # -(2/13)log2(2/13) - (11/13)log2(11/13) = 0.415452 + 0.203930
        line = EntropyExtractor.ceq_line(TransitionSummary((3, 9), (5, 14), 14))
        assert line.positive_part == pytest.approx(0.61938, abs=1e-5)

    def test_seq_single_term(self):
        """Test m=13, n=14, r_a=2, one transition at position 3."""
        expected = (2 / 13) * (
            (3 / 14) * math.log2(14 / 3) + (13 - 3 / 14) * math.log2(13 / 24)
        )

        line = EntropyExtractor.seq_line(TransitionSummary((3,), (), 14), m=13, n=14, r_a=2)

        assert line.positive_part == pytest.approx(expected, rel=1e-12)
        assert line.negative_part == 0.0

    def test_all_white_document(self, entropy):
        """Test that a page without ink scores zero everywhere."""
        doc = RleDocument.from_runs(7, [[7]] * 4)

        for result in (
            entropy.ceq_horizontal(doc),
            entropy.seq_horizontal(doc),
            entropy.ceq_vertical(doc),
            entropy.seq_vertical(doc),
        ):
            assert result.document_total == 0.0
