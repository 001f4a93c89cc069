"""Exact models of categorified sl2 tensor products and their decategorifications."""

__version__ = "0.1.0"
