"""Compressed-domain features must equal the bitmap oracles on any input."""

import numpy as np
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import array_shapes, arrays

from rle_features.core import (
    FEATURE_NAMES,
    FeatureOptions,
    FeaturePipeline,
    FeatureVerifier,
    RleCodec,
    RleFileCodec,
)
from rle_features.models import BitonalImage, HistogramKind
from tests.fixtures import sample_page


def bitmaps(max_side: int):
    return arrays(
        np.uint8,
        array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=max_side),
        elements=st.integers(0, 1),
    ).map(BitonalImage)


@pytest.mark.integration
class TestSamplePage:
    """Golden values of the 13 x 14 sample page through the whole pipeline."""

    def test_every_feature(self, sample_doc):
        """Test each extracted feature against the hand-derived values."""
        pipeline = FeaturePipeline()

        assert list(pipeline.extract("row-profile", sample_doc).values) == sample_page.ROW_PROFILE
        assert (
            list(pipeline.extract("column-profile", sample_doc).values)
            == sample_page.COLUMN_PROFILE
        )
        assert pipeline.extract("black-hist", sample_doc).counts == sample_page.BLACK_HISTOGRAM
        assert pipeline.extract("white-hist", sample_doc).counts == sample_page.WHITE_HISTOGRAM
        assert (
            pipeline.extract("combined-hist", sample_doc).counts == sample_page.COMBINED_HISTOGRAM
        )
        assert (
            list(pipeline.extract("log-hist", sample_doc).frequencies)
            == sample_page.COMBINED_LOG_HISTOGRAM
        )
        assert pipeline.extract("blank-lines", sample_doc) == sample_page.BLANK_LINES
        transitions = pipeline.extract("transitions", sample_doc)
        assert [(t.pos_positions, t.neg_positions) for t in transitions] == sample_page.TRANSITIONS

    def test_log_hist_of_each_kind(self, sample_doc):
        """Test that log-hist rebins the selected histogram kind."""
        black = FeaturePipeline(FeatureOptions(histogram_kind=HistogramKind.BLACK))

        log_hist = black.extract("log-hist", sample_doc)

        # 1:3, 2:2, 3-4: 1+4, 5-8: 8
        assert log_hist.frequencies == (3, 2, 5, 8, 0, 0, 0, 0, 0)
        assert log_hist.kind is HistogramKind.BLACK

    def test_file_round_trip_keeps_features(self, sample_doc):
        """Test that features survive writing and reading the RLE1 container."""
        codec = RleFileCodec()
        pipeline = FeaturePipeline()

        reread = codec.read_rle_file(codec.write_rle_file(sample_doc))

        for feature in FEATURE_NAMES:
            assert pipeline.extract(feature, reread) == pipeline.extract(feature, sample_doc)


@pytest.mark.integration
class TestExactIdentity:
    """Randomized sweep: every feature equals its oracle on arbitrary bitmaps."""

    @settings(max_examples=60, deadline=None)
    @given(image=bitmaps(max_side=24))
    def test_all_features_match(self, image):
        """Test verify() passes on arbitrary small bitmaps."""
        doc = RleCodec().encode_rle(image)

        report = FeatureVerifier().verify(doc)

        assert report.passed, report.failures

    @settings(max_examples=30, deadline=None)
    @given(
        image=bitmaps(max_side=16),
        log_base=st.sampled_from([2.0, np.e, 10.0]),
        bins=st.integers(2, 12),
    )
    def test_parameters_do_not_break_identity(self, image, log_base, bins):
        """Test identity under every log base and bin count."""
        options = FeatureOptions(log_base=float(log_base), bins=bins)
        doc = RleCodec().encode_rle(image)

        report = FeatureVerifier(FeaturePipeline(options)).verify(doc)

        assert report.passed, report.failures

    @settings(max_examples=40, deadline=None)
    @given(image=bitmaps(max_side=24))
    def test_round_trip(self, image):
        """Test that decode(encode(image)) is the image and the row sums hold."""
        codec = RleCodec()
        doc = codec.encode_rle(image)

        assert codec.decode_rle(doc) == image
        assert all(row.width == image.width_n for row in doc.rows)
        assert doc.padded_width <= image.width_n + 1

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(
        density=st.one_of(st.sampled_from([0.0, 1.0]), st.floats(0.0, 1.0)),
        height=st.one_of(st.integers(1, 32), st.integers(1, 512)),
        width=st.one_of(st.integers(1, 32), st.integers(1, 512)),
        seed=st.integers(0, 2**32 - 1),
    )
    @example(density=0.5, height=1, width=1, seed=0)
    @example(density=0.0, height=512, width=512, seed=0)
    @example(density=1.0, height=512, width=512, seed=0)
    @example(density=0.5, height=512, width=512, seed=7)
    def test_larger_pages(self, density, height, width, seed):
        """Test identity on a thousand noise pages from 1x1 up to 512x512."""
        rng = np.random.default_rng(seed)
        image = BitonalImage((rng.random((height, width)) < density).astype(np.uint8))

        report = FeatureVerifier().verify(RleCodec().encode_rle(image))

        assert report.passed, report.failures


@pytest.mark.integration
class TestDegenerateInputs:
    """Single pixels, single rows and columns, all-white and all-black pages."""

    @pytest.mark.parametrize(
        "rows",
        [["0"], ["1"], ["0000000"], ["1111111"], ["0"] * 9, ["1"] * 9, ["0110", "0110"]],
    )
    def test_verify_passes(self, rows):
        """Test that degenerate shapes still verify."""
        doc = RleCodec().encode_rle(BitonalImage.from_rows(rows))
        assert FeatureVerifier().verify(doc).passed

    def test_single_pixel_entropy(self):
        """Test that a 1x1 page scores zero entropy on both axes."""
        doc = RleCodec().encode_rle(BitonalImage.from_rows(["1"]))
        pipeline = FeaturePipeline()

        for feature in ("ceq-h", "seq-h", "ceq-v", "seq-v"):
            assert pipeline.extract(feature, doc).document_total == 0.0
        assert pipeline.extract("ceq-h", doc).degenerate_lines == (1,)
        assert pipeline.extract("ceq-v", doc).degenerate_lines == (1,)

    def test_all_black_page(self):
        """Test that an all-black page is one black run per row."""
        doc = RleCodec().encode_rle(BitonalImage(np.ones((4, 6), dtype=np.uint8)))
        pipeline = FeaturePipeline()

        assert pipeline.extract("black-hist", doc).counts == {6: 4}
        assert pipeline.extract("white-hist", doc).counts == {}
        assert pipeline.extract("blank-lines", doc) == 0
        assert pipeline.extract("row-profile", doc).values == (6, 6, 6, 6)
