#!/usr/bin/env python3
"""
Entry point for the rle_features command-line tool.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

from rle_features.main import run

if __name__ == "__main__":
    run()
