from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, NamedTuple, Optional, Tuple


class ProfileAxis(str, Enum):
    ROW = "row"
    COLUMN = "column"


class HistogramKind(str, Enum):
    BLACK = "black"
    WHITE = "white"
    COMBINED = "combined"


class Quantifier(str, Enum):
    CEQ = "CEQ"
    SEQ = "SEQ"


class EntropyAxis(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class Profile:
    """Black-pixel counts per row (length m) or per column (length n)."""

    values: Tuple[int, ...]
    axis: ProfileAxis

    @property
    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class RunHistogram:
    """Run length -> frequency. Keys are >= 1 and kept in ascending order."""

    counts: Dict[int, int]
    kind: HistogramKind

    def __post_init__(self):
        if any(length < 1 for length in self.counts):
            raise ValueError("run histogram keys must be >= 1")
        ordered = {
            length: frequency
            for length, frequency in sorted(self.counts.items())
            if frequency
        }
        object.__setattr__(self, "counts", ordered)

    @property
    def total_runs(self) -> int:
        return sum(self.counts.values())

    @property
    def total_pixels(self) -> int:
        return sum(length * frequency for length, frequency in self.counts.items())


class LogBin(NamedTuple):
    lower: int
    upper: Optional[int]  # None: open-ended
    frequency: int


@dataclass(frozen=True)
class LogHistogram:
    bins: Tuple[LogBin, ...]
    kind: HistogramKind

    @property
    def frequencies(self) -> Tuple[int, ...]:
        return tuple(b.frequency for b in self.bins)

    @property
    def total_runs(self) -> int:
        return sum(self.frequencies)


class TransitionSummary(NamedTuple):
    """0->1 and 1->0 transitions of one line, positions 1-based.

    A line that begins black has a 0->1 transition at position 1.
    """

    pos_positions: Tuple[int, ...]
    neg_positions: Tuple[int, ...]
    line_length: int

    @property
    def pos_count(self) -> int:
        return len(self.pos_positions)

    @property
    def neg_count(self) -> int:
        return len(self.neg_positions)


class LineEntropy(NamedTuple):
    positive_part: float
    negative_part: float
    degenerate: bool = False

    @property
    def total(self) -> float:
        return self.positive_part + self.negative_part


@dataclass(frozen=True)
class EntropyResult:
    """Per-line CEQ or SEQ values along one axis of a document."""

    per_line: Tuple[LineEntropy, ...]
    quantifier: Quantifier
    axis: EntropyAxis
    log_base: float
    degenerate_lines: Tuple[int, ...] = field(default=())

    @property
    def document_total(self) -> float:
        # ascending line order, plain left-to-right summation
        total = 0.0
        for line in self.per_line:
            total += line.total
        return total
