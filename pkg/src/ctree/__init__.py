"""Exact computation with colored rooted trees, shuffle words and truncated polylogarithms."""

__version__ = "0.1.0"
