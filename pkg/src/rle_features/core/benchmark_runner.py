import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from rle_features.core.feature_pipeline import BENCH_FEATURES, FeaturePipeline
from rle_features.core.feature_verifier import FeatureVerifier
from rle_features.exceptions import CorpusEmptyError, MismatchDetectedError
from rle_features.models import BenchReport, DocumentTiming, RleDocument, time_saved_percent

Corpus = Union[Mapping[str, RleDocument], Sequence[RleDocument]]

DEFAULT_REPETITIONS = 5

__all__ = ["BenchmarkRunner", "time_saved_percent"]


class BenchmarkRunner:
    """Times each feature along both paths over a corpus.

    T2 is the compressed-domain extraction time, D the decode time and
    T1 = D + bitmap-domain extraction time, each summed over the corpus.
    Every document is timed ``repetitions`` times and its fastest run kept.
    A correctness pass (which also warms up) precedes the timed runs; a
    feature whose two paths disagree is never timed.
    """

    def __init__(
        self,
        pipeline: Optional[FeaturePipeline] = None,
        clock: Callable[[], float] = time.perf_counter,
        max_workers: Optional[int] = None,
    ):
        self.logger = logging.getLogger(__name__)
        self.pipeline = pipeline or FeaturePipeline()
        self.verifier = FeatureVerifier(self.pipeline)
        self.clock = clock
        self.max_workers = max_workers

    @staticmethod
    def _named(corpus: Corpus) -> Dict[str, RleDocument]:
        if isinstance(corpus, Mapping):
            return dict(corpus)
        return {f"doc-{index:03d}": doc for index, doc in enumerate(corpus, 1)}

    def _timed(self, fn: Callable, *args) -> Tuple[float, Any]:
        start = self.clock()
        result = fn(*args)
        return self.clock() - start, result

    def run_benchmark(
        self,
        corpus: Corpus,
        features: Sequence[str] = BENCH_FEATURES,
        repetitions: int = DEFAULT_REPETITIONS,
    ) -> List[BenchReport]:
        """
        Benchmark ``features`` over ``corpus``.

        Raises:
            CorpusEmptyError: If the corpus holds no documents.
            MismatchDetectedError: If a feature's compressed and oracle outputs differ.
            ValueError: If repetitions < 1 or a feature name is unknown.
        """
        documents = self._named(corpus)
        if not documents:
            raise CorpusEmptyError("benchmark corpus is empty")
        if repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {repetitions}")

        parallel = bool(self.max_workers and self.max_workers > 1)
        if parallel:
            self.logger.warning(
                f"Throughput mode: timings are wall-clock over {self.max_workers} threads"
            )

        reports = []
        total = len(features)
        for idx, feature in enumerate(features, 1):
            self.logger.info(f"Benchmarking {idx}/{total}: {feature}")
            self._check_correctness(feature, documents)
            if parallel:
                report = self._run_parallel(feature, documents, repetitions)
            else:
                report = self._run_sequential(feature, documents, repetitions)
            self.logger.info(
                f"  ✓ {feature}: T2={report.t2:.6f}s D={report.d:.6f}s "
                f"T1={report.t1:.6f}s saved={report.time_saved_percent:.2f}%"
            )
            reports.append(report)

        return reports

    def _check_correctness(self, feature: str, documents: Dict[str, RleDocument]) -> None:
        for name, doc in documents.items():
            image = self.pipeline.codec.decode_rle(doc)
            detail = self.verifier.first_difference(
                self.pipeline.extract(feature, doc),
                self.pipeline.extract_oracle(feature, image),
            )
            if detail is not None:
                raise MismatchDetectedError(feature, f"{name}: {detail}")

    def _run_sequential(
        self, feature: str, documents: Dict[str, RleDocument], repetitions: int
    ) -> BenchReport:
        best = {name: [math.inf, math.inf, math.inf] for name in documents}

        for rep in range(repetitions):
            for name, doc in documents.items():
                t2, _ = self._timed(self.pipeline.extract, feature, doc)
                d, image = self._timed(self.pipeline.codec.decode_rle, doc)
                extract, _ = self._timed(self.pipeline.extract_oracle, feature, image)
                timings = best[name]
                timings[0] = min(timings[0], t2)
                timings[1] = min(timings[1], d)
                timings[2] = min(timings[2], extract)
            self.logger.debug(f"  {feature}: repetition {rep + 1}/{repetitions} done")

        per_document = tuple(
            DocumentTiming(document=name, t2=t2, d=d, t1=d + extract)
            for name, (t2, d, extract) in best.items()
        )
        return BenchReport(
            feature_name=feature,
            t2=sum(doc.t2 for doc in per_document),
            d=sum(doc.d for doc in per_document),
            t1=sum(doc.t1 for doc in per_document),
            repetitions=repetitions,
            corpus_size=len(documents),
            documents=per_document,
        )

    def _run_parallel(
        self, feature: str, documents: Dict[str, RleDocument], repetitions: int
    ) -> BenchReport:
        docs = list(documents.values())
        t2_best = d_best = extract_best = math.inf

        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            for _ in range(repetitions):
                t2, _ = self._timed(
                    lambda: list(pool.map(lambda doc: self.pipeline.extract(feature, doc), docs))
                )
                d, images = self._timed(
                    lambda: list(pool.map(self.pipeline.codec.decode_rle, docs))
                )
                extract, _ = self._timed(
                    lambda: list(
                        pool.map(lambda image: self.pipeline.extract_oracle(feature, image), images)
                    )
                )
                t2_best = min(t2_best, t2)
                d_best = min(d_best, d)
                extract_best = min(extract_best, extract)

        return BenchReport(
            feature_name=feature,
            t2=t2_best,
            d=d_best,
            t1=d_best + extract_best,
            repetitions=repetitions,
            corpus_size=len(documents),
            mode="throughput",
        )
