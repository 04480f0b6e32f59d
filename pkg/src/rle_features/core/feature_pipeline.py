import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict

from rle_features.core.entropy_extractor import DEFAULT_LOG_BASE, EntropyExtractor
from rle_features.core.histogram_extractor import DEFAULT_LOG_BINS, HistogramExtractor
from rle_features.core.profile_extractor import ProfileExtractor
from rle_features.core.rle_codec import RleCodec
from rle_features.models import BitonalImage, HistogramKind, RleDocument


@dataclass(frozen=True)
class FeatureOptions:
    """Parameters shared by the features that take any."""

    log_base: float = DEFAULT_LOG_BASE
    bins: int = DEFAULT_LOG_BINS
    histogram_kind: HistogramKind = HistogramKind.COMBINED


# Selectable with `features` and checked by `verify`.
FEATURE_NAMES = (
    "row-profile",
    "column-profile",
    "black-hist",
    "white-hist",
    "combined-hist",
    "log-hist",
    "blank-lines",
    "transitions",
    "column-transitions",
    "ceq-h",
    "seq-h",
    "ceq-v",
    "seq-v",
)

# Timed by `bench`: profiles, run-histogram (all three kinds) and entropy.
BENCH_FEATURES = (
    "row-profile",
    "column-profile",
    "run-histogram",
    "ceq-h",
    "seq-h",
)


class FeaturePipeline:
    """Names every feature and routes it to its compressed-domain extractor
    or to its bitmap-domain oracle.
    """

    def __init__(self, options: FeatureOptions = FeatureOptions()):
        self.logger = logging.getLogger(__name__)
        self.options = options
        self.codec = RleCodec()
        self.profiles = ProfileExtractor()
        self.histograms = HistogramExtractor()
        self.entropy = EntropyExtractor(self.profiles)

        self._compressed: Dict[str, Callable[[RleDocument], Any]] = {
            "row-profile": self.profiles.row_profile_compressed,
            "column-profile": self.profiles.column_profile_compressed,
            "black-hist": self.histograms.black_run_histogram,
            "white-hist": self.histograms.white_run_histogram,
            "combined-hist": self.histograms.combined_run_histogram,
            "log-hist": self._log_histogram,
            "blank-lines": self.histograms.blank_line_count,
            "transitions": self.entropy.row_transition_summaries,
            "column-transitions": self.entropy.column_transitions,
            "ceq-h": lambda doc: self.entropy.ceq_horizontal(doc, options.log_base),
            "seq-h": lambda doc: self.entropy.seq_horizontal(doc, options.log_base),
            "ceq-v": lambda doc: self.entropy.ceq_vertical(doc, options.log_base),
            "seq-v": lambda doc: self.entropy.seq_vertical(doc, options.log_base),
            "run-histogram": self.histograms.run_histograms,
        }
        self._oracle: Dict[str, Callable[[BitonalImage], Any]] = {
            "row-profile": self.profiles.row_profile_oracle,
            "column-profile": self.profiles.column_profile_oracle,
            "black-hist": self.histograms.black_run_histogram_oracle,
            "white-hist": self.histograms.white_run_histogram_oracle,
            "combined-hist": self.histograms.combined_run_histogram_oracle,
            "log-hist": self._log_histogram_oracle,
            "blank-lines": self.histograms.blank_line_count_oracle,
            "transitions": self.entropy.row_transitions_oracle,
            "column-transitions": self.entropy.column_transitions_oracle,
            "ceq-h": lambda image: self.entropy.ceq_horizontal_oracle(image, options.log_base),
            "seq-h": lambda image: self.entropy.seq_horizontal_oracle(image, options.log_base),
            "ceq-v": lambda image: self.entropy.ceq_vertical_oracle(image, options.log_base),
            "seq-v": lambda image: self.entropy.seq_vertical_oracle(image, options.log_base),
            "run-histogram": self.histograms.run_histograms_oracle,
        }

    def _check_feature(self, feature: str) -> None:
        if feature not in self._compressed:
            known = ", ".join(sorted(self._compressed))
            raise ValueError(f"Unknown feature {feature!r}; expected one of: {known}")

    def extract(self, feature: str, doc: RleDocument) -> Any:
        """Compute ``feature`` from the run lists, without decompressing."""
        self._check_feature(feature)
        return self._compressed[feature](doc)

    def extract_oracle(self, feature: str, image: BitonalImage) -> Any:
        """Compute ``feature`` from the decoded bitmap."""
        self._check_feature(feature)
        return self._oracle[feature](image)

    def _histogram(self, doc: RleDocument):
        kind = self.options.histogram_kind
        if kind is HistogramKind.BLACK:
            return self.histograms.black_run_histogram(doc)
        if kind is HistogramKind.WHITE:
            return self.histograms.white_run_histogram(doc)
        return self.histograms.combined_run_histogram(doc)

    def _histogram_oracle(self, image: BitonalImage):
        kind = self.options.histogram_kind
        if kind is HistogramKind.BLACK:
            return self.histograms.black_run_histogram_oracle(image)
        if kind is HistogramKind.WHITE:
            return self.histograms.white_run_histogram_oracle(image)
        return self.histograms.combined_run_histogram_oracle(image)

    def _log_histogram(self, doc: RleDocument):
        return self.histograms.log_scale_histogram(self._histogram(doc), self.options.bins)

    def _log_histogram_oracle(self, image: BitonalImage):
        return self.histograms.log_scale_histogram(
            self._histogram_oracle(image), self.options.bins
        )

