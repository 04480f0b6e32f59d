from dataclasses import asdict, dataclass, field
from enum import IntEnum
from typing import Any, Dict, Optional, Tuple

from rle_features.exceptions import NonPositiveBaselineError


def time_saved_percent(t1: float, t2: float) -> float:
    """Share of the decompress-then-extract time T1 saved by extracting in
    the compressed domain (T2). Negative when the compressed path is slower.
    """
    if t1 <= 0:
        raise NonPositiveBaselineError(f"T1 must be positive, got {t1}")
    return (t1 - t2) / t1 * 100


class ExitCode(IntEnum):
    SUCCESS = 0
    MISMATCH = 1
    USAGE_ERROR = 2
    IO_ERROR = 3


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: ExitCode
    diagnostics: str = ""


@dataclass(frozen=True)
class DocumentTiming:
    """Best-of-N timings of one document for one feature (seconds)."""

    document: str
    t2: float
    d: float
    t1: float


@dataclass(frozen=True)
class BenchReport:
    """One benchmark row: compressed vs decompress-then-extract timings.

    ``t1`` already includes the decompression time ``d``.
    """

    feature_name: str
    t2: float
    d: float
    t1: float
    repetitions: int
    corpus_size: int
    mode: str = "sequential"
    documents: Tuple[DocumentTiming, ...] = field(default=())

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.t2 < 0 or self.d < 0 or self.t1 < self.d:
            raise ValueError(
                f"inconsistent timings for {self.feature_name}: "
                f"T2={self.t2}, D={self.d}, T1={self.t1}"
            )

    @property
    def time_saved_percent(self) -> float:
        return time_saved_percent(self.t1, self.t2)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["time_saved_percent"] = self.time_saved_percent
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BenchReport":
        """Load a report; any stored time_saved_percent is recomputed."""
        documents = tuple(DocumentTiming(**doc) for doc in data.get("documents", ()))
        return cls(
            feature_name=data["feature_name"],
            t2=float(data["t2"]),
            d=float(data["d"]),
            t1=float(data["t1"]),
            repetitions=int(data["repetitions"]),
            corpus_size=int(data["corpus_size"]),
            mode=data.get("mode", "sequential"),
            documents=documents,
        )


@dataclass(frozen=True)
class FeatureCheck:
    feature: str
    passed: bool
    detail: Optional[str] = None


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[FeatureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> Tuple[FeatureCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)
