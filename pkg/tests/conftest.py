"""Pytest configuration and shared fixtures for the test suite."""

import numpy as np
import pytest
from faker import Faker

from rle_features.core import PbmCodec, RleCodec, RleFileCodec
from rle_features.models import BitonalImage, RleDocument
from rle_features.utils import blank_page, random_image, text_page
from tests.fixtures import sample_page

fake = Faker()
Faker.seed(1414)


# Sample page fixtures
@pytest.fixture
def sample_image():
    """The 13x14 sample bitmap."""
    return BitonalImage.from_rows(sample_page.BITMAP_ROWS)


@pytest.fixture
def sample_doc():
    """The 13x14 sample document in compressed form."""
    return RleDocument.from_runs(sample_page.WIDTH, sample_page.RUNS)


@pytest.fixture
def small_doc():
    """3x5 document of the rows 01100 / 11001 / 00000."""
    return RleDocument.from_runs(5, [[1, 2, 2], [0, 2, 2, 1], [5]])


# Codec fixtures
@pytest.fixture
def rle_codec():
    return RleCodec()


@pytest.fixture
def pbm_codec():
    return PbmCodec()


@pytest.fixture
def rle_file_codec():
    return RleFileCodec()


# Randomized data fixtures
@pytest.fixture
def rng():
    """Seeded numpy generator; the seed comes from the seeded Faker."""
    return np.random.default_rng(fake.random_int(0, 2**32 - 1))


@pytest.fixture
def random_images(rng):
    """A spread of shapes (1x1 up to 64x64) and densities (0% to 100%)."""
    images = []
    for density in (0.0, 0.05, 0.3, 0.5, 0.8, 1.0):
        for height, width in ((1, 1), (1, 17), (23, 1), (9, 14), (64, 64)):
            images.append(random_image(rng, height, width, density))
    return images


@pytest.fixture
def text_corpus(rng):
    """Ten mostly-blank 1000x1000 text-like pages, keyed by file name."""
    codec = RleCodec()
    return {
        f"{fake.unique.word()}-{index:02d}.rle": codec.encode_rle(text_page(rng, 1000, 1000))
        for index in range(10)
    }


@pytest.fixture
def corpus_dir(tmp_path, rng):
    """A directory of three small .rle documents."""
    directory = tmp_path / "corpus"
    directory.mkdir()
    codec = RleCodec()
    writer = RleFileCodec()
    for index in range(3):
        image = random_image(rng, 20, 30, 0.2) if index else blank_page(20, 30)
        path = directory / f"page-{index:03d}.rle"
        path.write_bytes(writer.write_rle_file(codec.encode_rle(image)))
    return directory

