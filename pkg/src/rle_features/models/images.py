from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from rle_features.exceptions import (
    DimensionMismatchError,
    InvalidImageError,
    InvalidRunSumError,
    InvalidRunsError,
    NonAlternatingZeroError,
)


@dataclass(frozen=True, eq=False)
class BitonalImage:
    """Uncompressed m x n binary pixel grid, 1 = black (ink), 0 = white."""

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 2:
            raise InvalidImageError(
                f"pixels must be a 2-D array, got {pixels.ndim} dimension(s)"
            )
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise InvalidImageError(f"image must be at least 1x1, got {pixels.shape}")
        if not np.isin(pixels, (0, 1)).all():
            raise InvalidImageError("pixels must be 0 (white) or 1 (black)")

        pixels = pixels.astype(np.uint8, copy=True)
        pixels.flags.writeable = False
        object.__setattr__(self, "pixels", pixels)

    @property
    def height_m(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width_n(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def black_pixel_count(self) -> int:
        return int(self.pixels.sum(dtype=np.int64))

    @classmethod
    def from_rows(cls, rows: Iterable[str]) -> "BitonalImage":
        """Build an image from strings such as ``"00110000111110"``."""
        rows = list(rows)
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise InvalidImageError(f"rows have differing widths: {sorted(widths)}")
        try:
            pixels = [[int(bit) for bit in row] for row in rows]
        except ValueError as e:
            raise InvalidImageError(f"rows may only contain '0' and '1': {e}") from e
        return cls(np.array(pixels, dtype=np.uint8))

    def to_rows(self) -> List[str]:
        return ["".join("1" if bit else "0" for bit in row) for row in self.pixels]

    def transpose(self) -> "BitonalImage":
        return BitonalImage(self.pixels.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitonalImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    __hash__ = None

    def __repr__(self) -> str:
        return f"BitonalImage(height_m={self.height_m}, width_n={self.width_n})"


@dataclass(frozen=True)
class RunRow:
    """Alternating white/black run lengths of one pixel row, white first.

    Only the leading white run may be 0 (the row starts black).
    """

    runs: Tuple[int, ...]

    def __post_init__(self):
        runs = tuple(int(length) for length in self.runs)
        if not runs:
            raise InvalidRunsError("a run row needs at least one run")
        for index, length in enumerate(runs):
            if length < 0:
                raise InvalidRunsError(
                    f"run {index + 1} has negative length {length}"
                )
            if length == 0 and index > 0:
                raise NonAlternatingZeroError(
                    f"zero-length run at position {index + 1}; only the first run may be 0"
                )
        object.__setattr__(self, "runs", runs)

    @property
    def white_runs(self) -> Tuple[int, ...]:
        return self.runs[0::2]

    @property
    def black_runs(self) -> Tuple[int, ...]:
        return self.runs[1::2]

    @property
    def run_count(self) -> int:
        return len(self.runs)

    @property
    def width(self) -> int:
        return sum(self.runs)


@dataclass(frozen=True)
class RleDocument:
    """Run-length compressed document: one RunRow per pixel row.

    Rows are ragged; the zero-padded m x n' matrix is a derived view
    (see ``RleCodec.padded_matrix_view``).
    """

    height_m: int
    width_n: int
    rows: Tuple[RunRow, ...]

    def __post_init__(self):
        rows = tuple(
            row if isinstance(row, RunRow) else RunRow(tuple(row)) for row in self.rows
        )
        if self.height_m < 1 or self.width_n < 1:
            raise DimensionMismatchError(
                f"document must be at least 1x1, got {self.height_m}x{self.width_n}"
            )
        if len(rows) != self.height_m:
            raise DimensionMismatchError(
                f"expected {self.height_m} rows, got {len(rows)}"
            )
        for index, row in enumerate(rows, 1):
            if row.width != self.width_n:
                raise InvalidRunSumError(
                    f"row {index} runs sum to {row.width}, expected {self.width_n}"
                )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_runs(
        cls, width_n: int, rows: Sequence[Sequence[int]]
    ) -> "RleDocument":
        return cls(
            height_m=len(rows),
            width_n=width_n,
            rows=tuple(RunRow(tuple(runs)) for runs in rows),
        )

    @property
    def padded_width(self) -> int:
        """n': the largest run count of any row."""
        return max(row.run_count for row in self.rows)

    @property
    def total_runs(self) -> int:
        return sum(row.run_count for row in self.rows)

    @property
    def compression_ratio(self) -> float:
        """Pixels per stored run."""
        return (self.height_m * self.width_n) / self.total_runs
