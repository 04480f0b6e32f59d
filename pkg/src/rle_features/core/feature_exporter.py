import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence

from rle_features.models import (
    BenchReport,
    EntropyResult,
    LogHistogram,
    Profile,
    RunHistogram,
    TransitionSummary,
    VerificationReport,
)

BENCH_COLUMNS = ["feature", "T2", "D", "T1", "time_saved_percent", "repetitions", "corpus_size"]


class FeatureExporter:
    """Renders feature values and reports as CSV or JSON text.

    CSV uses LF line endings and 1-based line indices; floats use their
    shortest round-trip repr so identical inputs give identical bytes.
    """

    FORMATS = ("csv", "json")

    @staticmethod
    def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    @staticmethod
    def _json(data: Any) -> str:
        return json.dumps(data, indent=2) + "\n"

    @staticmethod
    def _positions(positions: Sequence[int]) -> str:
        return " ".join(str(p) for p in positions)

    def render(self, value: Any, fmt: str = "csv") -> str:
        """Render any feature value produced by FeaturePipeline."""
        if fmt not in self.FORMATS:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {self.FORMATS}")
        as_json = fmt == "json"

        if isinstance(value, Profile):
            return self.profile_json(value) if as_json else self.profile_csv(value)
        if isinstance(value, RunHistogram):
            return self.histogram_json(value) if as_json else self.histogram_csv(value)
        if isinstance(value, LogHistogram):
            return self.log_histogram_json(value) if as_json else self.log_histogram_csv(value)
        if isinstance(value, EntropyResult):
            return self.entropy_json(value) if as_json else self.entropy_csv(value)
        if isinstance(value, int):
            return self._json({"blank_lines": value}) if as_json else self._csv(["blank_lines"], [[value]])
        if isinstance(value, tuple) and all(isinstance(v, TransitionSummary) for v in value):
            return self.transitions_json(value) if as_json else self.transitions_csv(value)
        raise TypeError(f"Cannot render value of type {type(value).__name__}")

    # ===== PROFILES =====

    def profile_csv(self, profile: Profile) -> str:
        return self._csv(["index", "count"], enumerate(profile.values, 1))

    def profile_json(self, profile: Profile) -> str:
        return self._json({"axis": profile.axis.value, "values": list(profile.values)})

    # ===== HISTOGRAMS =====

    def histogram_csv(self, hist: RunHistogram) -> str:
        return self._csv(["run_length", "frequency"], hist.counts.items())

    def histogram_json(self, hist: RunHistogram) -> str:
        return self._json(
            {"kind": hist.kind.value, "counts": [[k, v] for k, v in hist.counts.items()]}
        )

    def log_histogram_csv(self, hist: LogHistogram) -> str:
        return self._csv(
            ["bin_lower", "bin_upper", "frequency"],
            (
                (b.lower, "inf" if b.upper is None else b.upper, b.frequency)
                for b in hist.bins
            ),
        )

    def log_histogram_json(self, hist: LogHistogram) -> str:
        return self._json(
            {
                "kind": hist.kind.value,
                "bins": [
                    {
                        "lower": b.lower,
                        "upper": "inf" if b.upper is None else b.upper,
                        "frequency": b.frequency,
                    }
                    for b in hist.bins
                ],
            }
        )

    # ===== TRANSITIONS AND ENTROPY =====

    def transitions_csv(self, summaries: Sequence[TransitionSummary]) -> str:
        return self._csv(
            ["line_index", "pos_count", "pos_positions", "neg_count", "neg_positions"],
            (
                (
                    index,
                    s.pos_count,
                    self._positions(s.pos_positions),
                    s.neg_count,
                    self._positions(s.neg_positions),
                )
                for index, s in enumerate(summaries, 1)
            ),
        )

    def transitions_json(self, summaries: Sequence[TransitionSummary]) -> str:
        return self._json(
            [
                {
                    "line_index": index,
                    "pos_positions": list(s.pos_positions),
                    "neg_positions": list(s.neg_positions),
                    "line_length": s.line_length,
                }
                for index, s in enumerate(summaries, 1)
            ]
        )

    def entropy_csv(self, result: EntropyResult) -> str:
        return self._csv(
            ["line_index", "positive_part", "negative_part", "total"],
            (
                (index, repr(line.positive_part), repr(line.negative_part), repr(line.total))
                for index, line in enumerate(result.per_line, 1)
            ),
        )

    def entropy_json(self, result: EntropyResult) -> str:
        data = self.entropy_summary(result)
        data["lines"] = [
            {"positive_part": line.positive_part, "negative_part": line.negative_part}
            for line in result.per_line
        ]
        return self._json(data)

    @staticmethod
    def entropy_summary(result: EntropyResult) -> Dict[str, Any]:
        return {
            "quantifier": result.quantifier.value,
            "axis": result.axis.value,
            "log_base": result.log_base,
            "document_total": result.document_total,
            "degenerate_lines": list(result.degenerate_lines),
        }

    # ===== REPORTS =====

    def bench_csv(self, reports: Sequence[BenchReport]) -> str:
        return self._csv(
            BENCH_COLUMNS,
            (
                (
                    r.feature_name,
                    repr(r.t2),
                    repr(r.d),
                    repr(r.t1),
                    f"{r.time_saved_percent:.2f}",
                    r.repetitions,
                    r.corpus_size,
                )
                for r in reports
            ),
        )

    def bench_json(self, reports: Sequence[BenchReport]) -> str:
        return self._json([report.to_dict() for report in reports])

    def verification_table(self, report: VerificationReport) -> str:
        width = max(len(check.feature) for check in report.checks)
        lines: List[str] = []
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{check.feature.ljust(width)}  {status}"
            if check.detail:
                line = f"{line}  {check.detail}"
            lines.append(line)
        return "\n".join(lines) + "\n"
