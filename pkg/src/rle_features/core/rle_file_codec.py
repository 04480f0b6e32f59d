import logging
import re
from typing import List, Tuple

from rle_features.exceptions import (
    BadMagicError,
    DimensionMismatchError,
    FormatError,
    InvalidRunSumError,
    MalformedHeaderError,
    MalformedPayloadError,
)
from rle_features.models import RleDocument, RunRow

RLE_MAGIC = "RLE1"
_DIMENSIONS = re.compile(r"(\d+) (\d+)")
_RUN_LINE = re.compile(r"\d+( \d+)*")


class RleFileCodec:
    """Reads and writes the ASCII ``RLE1`` container.

    Layout: ``RLE1``, then ``<m> <n>``, then one line of space-separated run
    lengths per row (white first), every line LF-terminated.
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _split_lines(data: bytes) -> List[Tuple[int, bytes]]:
        """Lines paired with the byte offset where each starts."""
        lines = []
        offset = 0
        for line in data.split(b"\n"):
            lines.append((offset, line))
            offset += len(line) + 1
        if lines and lines[-1][1] == b"":
            lines.pop()  # final LF terminator
        return lines

    def read_rle_file(self, data: bytes) -> RleDocument:
        """
        Parse an RLE1 container.

        Raises:
            BadMagicError: If the first line is not ``RLE1``.
            MalformedHeaderError: If the dimension line is not ``<m> <n>``.
            DimensionMismatchError: If m or n is 0 or the row count differs from m.
            MalformedPayloadError: If a row line is not space-separated decimals.
            InvalidRunSumError: If a row does not sum to n.
            NonAlternatingZeroError: If a zero run appears after the first position.
        """
        lines = self._split_lines(data)
        if not lines or lines[0][1] != RLE_MAGIC.encode("ascii"):
            found = lines[0][1][:16] if lines else b""
            raise BadMagicError(f"expected {RLE_MAGIC!r} magic, found {found!r}", offset=0)

        if len(lines) < 2:
            raise MalformedHeaderError("missing '<m> <n>' dimension line", offset=len(data))
        dims_offset, dims_line = lines[1]
        match = _DIMENSIONS.fullmatch(dims_line.decode("ascii", errors="replace"))
        if not match:
            raise MalformedHeaderError(
                f"dimension line must be '<m> <n>', found {dims_line[:32]!r}",
                offset=dims_offset,
            )
        height, width = int(match.group(1)), int(match.group(2))
        if height < 1 or width < 1:
            raise DimensionMismatchError(
                f"dimensions must be at least 1x1, got {height}x{width}",
                offset=dims_offset,
            )

        row_lines = lines[2:]
        if len(row_lines) != height:
            raise DimensionMismatchError(
                f"header declares {height} rows, found {len(row_lines)}",
                offset=row_lines[height][0] if len(row_lines) > height else len(data),
            )

        rows = []
        for index, (offset, line) in enumerate(row_lines, 1):
            text = line.decode("ascii", errors="replace")
            if not _RUN_LINE.fullmatch(text):
                raise MalformedPayloadError(
                    f"row {index} is not space-separated run lengths: {line[:32]!r}",
                    offset=offset,
                )
            try:
                row = RunRow(tuple(int(token) for token in text.split(" ")))
            except FormatError as e:
                e.message = f"row {index}: {e.message}"
                e.offset = offset
                raise
            if row.width != width:
                raise InvalidRunSumError(
                    f"row {index} runs sum to {row.width}, expected {width}",
                    offset=offset,
                )
            rows.append(row)

        self.logger.debug(f"Read RLE1 document {height}x{width}")
        return RleDocument(height_m=height, width_n=width, rows=tuple(rows))

    def write_rle_file(self, doc: RleDocument) -> bytes:
        lines = [RLE_MAGIC, f"{doc.height_m} {doc.width_n}"]
        lines.extend(" ".join(str(length) for length in row.runs) for row in doc.rows)
        return ("\n".join(lines) + "\n").encode("ascii")
