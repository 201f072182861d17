"""Exact computations around Hurwitz-Radon numbers, Clifford algebras and proper SL(2,R)-actions."""

from .errors import HRError

__all__ = ["HRError"]
__version__ = "0.1.0"
