import logging
import re
from typing import Tuple

import numpy as np

from rle_features.exceptions import (
    MalformedHeaderError,
    MalformedPayloadError,
    TruncatedPayloadError,
    UnsupportedMagicError,
)
from rle_features.models import BitonalImage

PBM_WHITESPACE = b" \t\n\v\f\r"
_COMMENT = re.compile(rb"#[^\n\r]*")


class PbmCodec:
    """Reads plain (P1) and raw (P4) PBM; writes raw P4.

    PBM's 1 = black matches the pixel convention, so no inversion happens.
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _skip_space_and_comments(data: bytes, offset: int) -> int:
        while offset < len(data):
            byte = data[offset : offset + 1]
            if byte == b"#":
                while offset < len(data) and data[offset : offset + 1] not in b"\r\n":
                    offset += 1
            elif byte in PBM_WHITESPACE:
                offset += 1
            else:
                break
        return offset

    def _read_dimension(self, data: bytes, offset: int, name: str) -> Tuple[int, int]:
        offset = self._skip_space_and_comments(data, offset)
        start = offset
        while offset < len(data) and data[offset : offset + 1].isdigit():
            offset += 1
        if start == offset:
            if start >= len(data):
                raise MalformedHeaderError(f"header ends before {name}", offset=start)
            raise MalformedHeaderError(f"expected decimal {name}", offset=start)
        value = int(data[start:offset])
        if value < 1:
            raise MalformedHeaderError(f"{name} must be >= 1, got {value}", offset=start)
        return value, offset

    def read_pbm(self, data: bytes) -> BitonalImage:
        """
        Parse a P1 or P4 PBM file.

        Raises:
            UnsupportedMagicError: For any magic other than P1/P4.
            MalformedHeaderError: For a missing or invalid width/height.
            TruncatedPayloadError: When fewer pixels than width x height follow.
            MalformedPayloadError: For characters other than 0/1 in a P1 payload.
        """
        if len(data) < 2:
            raise MalformedHeaderError("file too short for a PBM magic number", offset=0)
        magic = data[:2]
        if magic not in (b"P1", b"P4"):
            raise UnsupportedMagicError(
                f"unsupported magic {magic!r}; expected P1 or P4", offset=0
            )

        width, offset = self._read_dimension(data, 2, "width")
        height, offset = self._read_dimension(data, offset, "height")

        if offset >= len(data) or data[offset : offset + 1] not in PBM_WHITESPACE:
            raise MalformedHeaderError(
                "expected whitespace after the height", offset=offset
            )
        offset += 1

        if magic == b"P4":
            pixels = self._read_raw_payload(data, offset, width, height)
        else:
            pixels = self._read_plain_payload(data, offset, width, height)

        self.logger.debug(f"Read {magic.decode()} image {height}x{width}")
        return BitonalImage(pixels)

    @staticmethod
    def _read_raw_payload(data: bytes, offset: int, width: int, height: int) -> np.ndarray:
        row_bytes = (width + 7) // 8
        needed = row_bytes * height
        payload = data[offset : offset + needed]
        if len(payload) < needed:
            raise TruncatedPayloadError(
                f"raw payload has {len(payload)} bytes, expected {needed}",
                offset=offset + len(payload),
            )
        packed = np.frombuffer(payload, dtype=np.uint8).reshape(height, row_bytes)
        # padding bits at the end of each row are dropped
        return np.unpackbits(packed, axis=1)[:, :width]

    @staticmethod
    def _read_plain_payload(
        data: bytes, offset: int, width: int, height: int
    ) -> np.ndarray:
        payload = np.frombuffer(data, dtype=np.uint8)[offset:]
        kept = ~np.isin(payload, np.frombuffer(PBM_WHITESPACE, dtype=np.uint8))
        for comment in _COMMENT.finditer(data, offset):
            kept[comment.start() - offset : comment.end() - offset] = False

        needed = width * height
        # positions of pixel digits, relative to the payload start
        positions = np.flatnonzero(kept)[:needed]
        bits = payload[positions]
        invalid = np.flatnonzero((bits < ord("0")) | (bits > ord("1")))
        if invalid.size:
            bad = int(invalid[0])
            raise MalformedPayloadError(
                f"plain payload pixel {bad + 1} is {bytes([bits[bad]])!r}, expected 0 or 1",
                offset=offset + int(positions[bad]),
            )
        if bits.size < needed:
            raise TruncatedPayloadError(
                f"plain payload has {bits.size} pixels, expected {needed}",
                offset=len(data),
            )
        return (bits - ord("0")).reshape(height, width)

    def write_pbm(self, image: BitonalImage) -> bytes:
        """Serialize as raw P4 with byte-padded rows."""
        header = f"P4\n{image.width_n} {image.height_m}\n".encode("ascii")
        return header + np.packbits(image.pixels, axis=1).tobytes()
