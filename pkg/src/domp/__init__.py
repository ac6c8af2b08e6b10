"""Exact Darboux transformations of matrix Bochner pairs."""

from __future__ import annotations

__version__ = "0.1.0"
