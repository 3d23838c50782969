"""Exact verification toolkit for the Groenewold-Van Hove obstruction on the sphere."""
from ._backend import BACKEND

__all__ = ["BACKEND"]

__version__ = "0.1.0"
