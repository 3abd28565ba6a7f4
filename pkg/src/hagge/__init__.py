"""Exact projective geometry for verifying two Hagge-type concurrency theorems."""

__version__ = "0.1.0"
