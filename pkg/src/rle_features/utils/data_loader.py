import logging
import sys
from pathlib import Path
from typing import Dict, Union

from rle_features.core import PbmCodec, RleFileCodec
from rle_features.exceptions import CorpusEmptyError, FormatError
from rle_features.models import BitonalImage, RleDocument

STDIO = "-"

logger = logging.getLogger(__name__)
PathLike = Union[str, Path]


def read_input(source: PathLike) -> bytes:
    """
    Read raw bytes from a file, or from stdin when ``source`` is ``-``.

    Raises:
        FileNotFoundError: If the specified file doesn't exist.
    """
    if str(source) == STDIO:
        return sys.stdin.buffer.read()

    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    return path.read_bytes()


def write_output(destination: PathLike, data: Union[bytes, str]) -> None:
    """Write bytes (or UTF-8 text) to a file, or to stdout for ``-``."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    if str(destination) == STDIO:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    Path(destination).write_bytes(data)


def _attach_source(error: FormatError, source: PathLike) -> None:
    error.with_source("<stdin>" if str(source) == STDIO else str(source))


def load_document(source: PathLike) -> RleDocument:
    """Load an RLE1 document; format errors name the file they came from."""
    data = read_input(source)
    try:
        return RleFileCodec().read_rle_file(data)
    except FormatError as e:
        _attach_source(e, source)
        raise


def load_image(source: PathLike) -> BitonalImage:
    """Load a P1/P4 PBM image; format errors name the file they came from."""
    data = read_input(source)
    try:
        return PbmCodec().read_pbm(data)
    except FormatError as e:
        _attach_source(e, source)
        raise


def load_corpus(directory: PathLike) -> Dict[str, RleDocument]:
    """
    Load every ``*.rle`` file of a directory, keyed by file name, in name order.

    Raises:
        FileNotFoundError: If the directory doesn't exist.
        CorpusEmptyError: If it holds no ``.rle`` files.
        FormatError: For the first corrupt file, naming it.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"Corpus directory not found: {directory}")

    files = sorted(directory.glob("*.rle"))
    if not files:
        raise CorpusEmptyError(f"No .rle files in {directory}")

    corpus = {}
    for index, path in enumerate(files, 1):
        logger.info(f"Loading {index}/{len(files)}: {path.name}")
        corpus[path.name] = load_document(path)
    return corpus
