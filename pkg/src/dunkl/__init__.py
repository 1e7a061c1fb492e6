"""Exact and numerical Dunkl operator theory for finite reflection groups."""
from .errors import DunklError
from .poly import Polynomial
from .roots import RootSystem, build_root_system
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = ["DunklError", "Polynomial", "RootSystem", "Scalar", "build_root_system", "__version__"]
