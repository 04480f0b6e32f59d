import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from rle_features.exceptions import InvalidRunSumError
from rle_features.models import BitonalImage, RleDocument, RunRow


class RleCodec:
    """Lossless conversion between bitonal images and run-length documents."""

    def __init__(self, max_workers: Optional[int] = None):
        self.logger = logging.getLogger(__name__)
        self.max_workers = max_workers

    @staticmethod
    def _encode_row(bits: np.ndarray) -> RunRow:
        change_points = np.flatnonzero(bits[1:] != bits[:-1]) + 1
        edges = np.concatenate(([0], change_points, [bits.size]))
        runs = np.diff(edges).tolist()
        if bits[0]:
            runs.insert(0, 0)
        return RunRow(tuple(runs))

    def encode_rle(self, image: BitonalImage) -> RleDocument:
        """Maximal-run decomposition of every pixel row, white run first."""
        if self.max_workers and self.max_workers > 1 and image.height_m > 1:
            # map() keeps row order
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                rows = tuple(pool.map(self._encode_row, image.pixels))
        else:
            rows = tuple(self._encode_row(bits) for bits in image.pixels)

        return RleDocument(height_m=image.height_m, width_n=image.width_n, rows=rows)

    def decode_rle(self, doc: RleDocument) -> BitonalImage:
        """Expand every row back to pixels; exact inverse of encode_rle.

        Raises:
            InvalidRunSumError: If a row does not expand to width_n pixels.
        """
        pixels = np.empty((doc.height_m, doc.width_n), dtype=np.uint8)
        for index, row in enumerate(doc.rows):
            runs = np.asarray(row.runs, dtype=np.int64)
            colors = (np.arange(runs.size) & 1).astype(np.uint8)
            line = np.repeat(colors, runs)
            if line.size != doc.width_n:
                raise InvalidRunSumError(
                    f"row {index + 1} expands to {line.size} pixels, expected {doc.width_n}"
                )
            pixels[index] = line

        return BitonalImage(pixels)

    def padded_matrix_view(self, doc: RleDocument) -> np.ndarray:
        """Rectangular m x n' run matrix, rows right-padded with structural zeros."""
        matrix = np.zeros((doc.height_m, doc.padded_width), dtype=np.int64)
        for index, row in enumerate(doc.rows):
            matrix[index, : row.run_count] = row.runs
        return matrix
