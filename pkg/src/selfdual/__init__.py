"""Exact enumeration of self-dual integral classes in polarized Hodge structures."""

from .errors import DimensionError, InvariantError, NonRationalError, NotNilpotentError, SelfDualError

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "InvariantError",
    "NonRationalError",
    "NotNilpotentError",
    "SelfDualError",
    "__version__",
]
