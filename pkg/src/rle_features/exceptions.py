"""Error hierarchy for rle_features."""

from typing import Optional


class RleFeaturesError(Exception):
    """Base class for every error raised by this package."""


class FormatError(RleFeaturesError, ValueError):
    """Input bytes or run data that do not form a valid image/document.

    Carries the byte offset of the offending token when it is known and the
    source file name once a loader attaches it.
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.source: Optional[str] = None

    def with_source(self, source: str) -> "FormatError":
        self.source = source
        return self

    def __str__(self) -> str:
        text = self.message
        if self.offset is not None:
            text = f"{text} (at byte {self.offset})"
        if self.source:
            text = f"{self.source}: {text}"
        return text


class MalformedHeaderError(FormatError):
    pass


class MalformedPayloadError(FormatError):
    pass


class TruncatedPayloadError(FormatError):
    pass


class UnsupportedMagicError(FormatError):
    pass


class BadMagicError(FormatError):
    pass


class DimensionMismatchError(FormatError):
    pass


class InvalidRunsError(FormatError):
    """A run list that violates the white-first alternating convention."""


class InvalidRunSumError(InvalidRunsError):
    pass


class NonAlternatingZeroError(InvalidRunsError):
    pass


class InvalidImageError(RleFeaturesError, ValueError):
    pass


class InvalidBinCountError(RleFeaturesError, ValueError):
    pass


class InvalidLogBaseError(RleFeaturesError, ValueError):
    pass


class NonPositiveBaselineError(RleFeaturesError, ValueError):
    pass


class CorpusEmptyError(RleFeaturesError):
    pass


class MismatchDetectedError(RleFeaturesError):
    """Compressed-domain and bitmap-domain outputs of a feature disagree."""

    def __init__(self, feature: str, detail: str):
        super().__init__(f"{feature}: {detail}")
        self.feature = feature
        self.detail = detail
