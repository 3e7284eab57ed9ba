"""Exact computational kernel for finite-dimensional left bialgebroids."""

from .linalg import BACKEND, Field, Matrix

__all__ = ["BACKEND", "Field", "Matrix"]
__version__ = "0.1.0"
