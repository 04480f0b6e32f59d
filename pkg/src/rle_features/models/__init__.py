from .images import BitonalImage, RleDocument, RunRow
from .features import (
    EntropyAxis,
    EntropyResult,
    HistogramKind,
    LineEntropy,
    LogBin,
    LogHistogram,
    Profile,
    ProfileAxis,
    Quantifier,
    RunHistogram,
    TransitionSummary,
)
from .reports import (
    BenchReport,
    CommandOutcome,
    DocumentTiming,
    ExitCode,
    FeatureCheck,
    VerificationReport,
    time_saved_percent,
)


__all__ = [
    "BitonalImage",
    "RleDocument",
    "RunRow",
    "EntropyAxis",
    "EntropyResult",
    "HistogramKind",
    "LineEntropy",
    "LogBin",
    "LogHistogram",
    "Profile",
    "ProfileAxis",
    "Quantifier",
    "RunHistogram",
    "TransitionSummary",
    "BenchReport",
    "CommandOutcome",
    "DocumentTiming",
    "ExitCode",
    "FeatureCheck",
    "VerificationReport",
    "time_saved_percent",
]
