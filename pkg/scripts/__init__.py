"""Standalone scripts for rle_features (corpus generation)."""
