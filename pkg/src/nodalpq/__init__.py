"""Exact computations with nodal plane curves of type p,q and their Weierstrass semigroups."""

from .errors import NodalPQError

__version__ = "0.1.0"

__all__ = ["NodalPQError", "__version__"]
