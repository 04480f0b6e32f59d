import logging
import math
from typing import Any, Optional, Sequence

from rle_features.core.feature_pipeline import FEATURE_NAMES, FeaturePipeline
from rle_features.models import (
    EntropyResult,
    FeatureCheck,
    LogHistogram,
    Profile,
    RleDocument,
    RunHistogram,
    VerificationReport,
)

ENTROPY_REL_TOL = 1e-12


class FeatureVerifier:
    """Checks that compressed-domain features equal their bitmap oracles.

    Integer features must match exactly; entropy values within a relative
    tolerance of 1e-12.
    """

    def __init__(
        self,
        pipeline: Optional[FeaturePipeline] = None,
        rel_tol: float = ENTROPY_REL_TOL,
    ):
        self.logger = logging.getLogger(__name__)
        self.pipeline = pipeline or FeaturePipeline()
        self.rel_tol = rel_tol

    def verify(
        self, doc: RleDocument, features: Sequence[str] = FEATURE_NAMES
    ) -> VerificationReport:
        """Decode once, then compute every feature both ways and compare."""
        image = self.pipeline.codec.decode_rle(doc)

        checks = []
        for feature in features:
            compressed = self.pipeline.extract(feature, doc)
            oracle = self.pipeline.extract_oracle(feature, image)
            detail = self.first_difference(compressed, oracle)
            checks.append(FeatureCheck(feature=feature, passed=detail is None, detail=detail))
            if detail is None:
                self.logger.debug(f"  ✓ {feature}")
            else:
                self.logger.info(f"  ✗ {feature}: {detail}")

        return VerificationReport(checks=tuple(checks))

    def _close(self, a: float, b: float) -> bool:
        return math.isclose(a, b, rel_tol=self.rel_tol, abs_tol=0.0)

    def first_difference(self, compressed: Any, oracle: Any) -> Optional[str]:
        """Describe the first point where two feature values differ, or None."""
        if type(compressed) is not type(oracle):
            return (
                f"type: compressed {type(compressed).__name__} "
                f"!= oracle {type(oracle).__name__}"
            )
        if isinstance(compressed, Profile):
            return self._sequence_difference("index", compressed.values, oracle.values)

        if isinstance(compressed, RunHistogram):
            for length in sorted(set(compressed.counts) | set(oracle.counts)):
                a = compressed.counts.get(length, 0)
                b = oracle.counts.get(length, 0)
                if a != b:
                    return f"run length {length}: compressed {a} != oracle {b}"
            return None

        if isinstance(compressed, LogHistogram):
            return self._sequence_difference("bin", compressed.bins, oracle.bins)

        if isinstance(compressed, EntropyResult):
            if len(compressed.per_line) != len(oracle.per_line):
                return f"line count: compressed {len(compressed.per_line)} != oracle {len(oracle.per_line)}"
            for index, (a, b) in enumerate(zip(compressed.per_line, oracle.per_line), 1):
                if not (
                    self._close(a.positive_part, b.positive_part)
                    and self._close(a.negative_part, b.negative_part)
                ):
                    return f"line {index}: compressed {tuple(a[:2])} != oracle {tuple(b[:2])}"
            if not self._close(compressed.document_total, oracle.document_total):
                return (
                    f"document total: compressed {compressed.document_total!r} "
                    f"!= oracle {oracle.document_total!r}"
                )
            return None

        if isinstance(compressed, tuple) and compressed and isinstance(compressed[0], RunHistogram):
            for a, b in zip(compressed, oracle):
                detail = self.first_difference(a, b)
                if detail:
                    return f"{a.kind.value}: {detail}"
            return None

        if isinstance(compressed, tuple):
            # transition summaries, one per line
            return self._sequence_difference("line", compressed, oracle)

        if compressed != oracle:
            return f"value: compressed {compressed!r} != oracle {oracle!r}"
        return None

    @staticmethod
    def _sequence_difference(label: str, a: Sequence, b: Sequence) -> Optional[str]:
        for index, (x, y) in enumerate(zip(a, b), 1):
            if x != y:
                return f"{label} {index}: compressed {x!r} != oracle {y!r}"
        if len(a) != len(b):
            return f"length: compressed {len(a)} != oracle {len(b)}"
        return None
