from .data_loader import load_corpus, load_document, load_image, read_input, write_output
from .corpus_generator import blank_page, random_image, text_page

__all__ = [
    "load_corpus",
    "load_document",
    "load_image",
    "read_input",
    "write_output",
    "blank_page",
    "random_image",
    "text_page",
]
