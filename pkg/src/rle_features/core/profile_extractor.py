import logging
import threading
from typing import Callable, Iterator, List, Tuple

import numpy as np

from rle_features.models import BitonalImage, Profile, ProfileAxis, RleDocument

ColumnVisitor = Callable[[Tuple[int, ...]], None]


class ProfileExtractor:
    """Projection profiles from run-length documents, with bitmap oracles.

    Naming follows what is summed: ``row_profile`` is one black-pixel count
    per row (obtained by adding each row's black runs), ``column_profile`` one
    count per column (obtained by walking all rows column by column).
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        # runs scanned by row_profile_compressed since construction,
        # guarded by _counter_lock since bench threads share one extractor
        self.runs_touched = 0
        self._counter_lock = threading.Lock()

    def row_profile_compressed(self, doc: RleDocument) -> Profile:
        """Sum every row's black (even-position) runs, skipping white runs."""
        values = []
        touched = 0
        for row in doc.rows:
            values.append(sum(row.black_runs))
            touched += row.run_count
        with self._counter_lock:
            self.runs_touched += touched
        return Profile(values=tuple(values), axis=ProfileAxis.ROW)

    def iter_columns(self, doc: RleDocument) -> Iterator[Tuple[int, ...]]:
        """Yield the m bits of each column in order, without a bitmap.

        Each row keeps a cursor: the index of its current run and the pixels
        left in it. The bit of a row is the parity of its run index (even
        index = white). State is O(m) whatever the width.
        """
        rows = [row.runs for row in doc.rows]
        run_index = [0] * doc.height_m
        remaining = [runs[0] for runs in rows]
        bits = [0] * doc.height_m

        for _ in range(doc.width_n):
            for r in range(doc.height_m):
                if remaining[r] == 0:
                    # only a leading white run can be empty, so one step
                    # always lands on a non-empty run
                    index = run_index[r] + 1
                    run_index[r] = index
                    remaining[r] = rows[r][index]
                    bits[r] = index & 1
                remaining[r] -= 1
            yield tuple(bits)

    def stream_columns(self, doc: RleDocument, visitor: ColumnVisitor) -> None:
        """Call ``visitor`` once per column, left to right, with its bit vector."""
        for column in self.iter_columns(doc):
            visitor(column)

    def column_profile_compressed(self, doc: RleDocument) -> Profile:
        values: List[int] = []
        self.stream_columns(doc, lambda column: values.append(sum(column)))
        return Profile(values=tuple(values), axis=ProfileAxis.COLUMN)

    def row_profile_oracle(self, image: BitonalImage) -> Profile:
        values = image.pixels.sum(axis=1, dtype=np.int64).tolist()
        return Profile(values=tuple(values), axis=ProfileAxis.ROW)

    def column_profile_oracle(self, image: BitonalImage) -> Profile:
        values = image.pixels.sum(axis=0, dtype=np.int64).tolist()
        return Profile(values=tuple(values), axis=ProfileAxis.COLUMN)
