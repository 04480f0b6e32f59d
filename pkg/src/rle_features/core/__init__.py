from .rle_codec import RleCodec
from .pbm_codec import PbmCodec
from .rle_file_codec import RleFileCodec
from .profile_extractor import ProfileExtractor
from .histogram_extractor import HistogramExtractor
from .entropy_extractor import EntropyExtractor
from .feature_pipeline import BENCH_FEATURES, FEATURE_NAMES, FeatureOptions, FeaturePipeline
from .feature_verifier import FeatureVerifier
from .benchmark_runner import BenchmarkRunner, time_saved_percent
from .feature_exporter import FeatureExporter

__all__ = [
    "RleCodec",
    "PbmCodec",
    "RleFileCodec",
    "ProfileExtractor",
    "HistogramExtractor",
    "EntropyExtractor",
    "BENCH_FEATURES",
    "FEATURE_NAMES",
    "FeatureOptions",
    "FeaturePipeline",
    "FeatureVerifier",
    "BenchmarkRunner",
    "time_saved_percent",
    "FeatureExporter",
]
